"""Checked-in manifest of the in-scope identity anchors.

The coverage test fails if any anchor listed here lacks at least one
registered case; the registry may not silently drop an identity.
"""

IN_SCOPE_ANCHORS = (
    # foundational layer
    "sec1-qpoch",
    "sec1-thetaq",
    "sec1-thetaq-qdiff",
    "sec1-theta11",
    "sec1-theta11-quasi",
    "sec1-heine",
    "sec1-ramanujan",
    "sec1-hickerson",
    "sec1-g3mu",
    # Appell-Lerch layer
    "def1.1",
    "thm1.1",
    "eq1.1", "eq1.2", "eq1.3", "eq1.4", "eq1.5", "eq1.6",
    "eq1.8",
    "eq1.12",
    "eq1.13", "eq1.14", "eq1.15", "eq1.16",
    "eq1.18", "eq1.19", "eq1.20",
    "eq1.21", "eq1.22", "eq1.23",
    "eq1.28", "eq1.29", "eq1.30", "eq1.31", "eq1.32",
    "eq1.33", "eq1.34", "eq1.35", "eq1.36",
    "thm1.3",
    "cor1.4",
    "eq1.44",
    "thm1.5",
    "thm1.6",
    # section 2
    "eq2.1",
    "lem2.1-connection",
    "eq1.9",
    "eq2.3",
    "eq2.4",
    "lem2.2-intertwine",
    # section 3
    "eq3.2",
    "eq3.5",
    "eq3.6",
    "eq3.7",
    "cor3.1",
    "cor3.2",
    "eq3.8",
    "eq3.10",
    "eq3.11",
    "eq3.12",
    "eq3.14",
    # section 4
    "prop4.1",
    "eq4.1",
    "eq4.2",
    # section 5
    "eq5.2", "eq5.3",
    "sec5-phi1-expr",
    "eq5.4", "eq5.5", "eq5.6",
)
