"""Committed reference data for the enumeration tests.

OEIS transcriptions (checked against the independent counting formulas in
oracles.py before being frozen here):

* A000055: free trees by vertex count
* A001429: connected unicyclic graphs by vertex count
"""

FREE_TREE_COUNTS = {
    0: 1,
    1: 1,
    2: 1,
    3: 1,
    4: 2,
    5: 3,
    6: 6,
    7: 11,
    8: 23,
    9: 47,
    10: 106,
    11: 235,
    12: 551,
    13: 1301,
    14: 3159,
}

UNICYCLIC_COUNTS = {
    3: 1,
    4: 2,
    5: 5,
    6: 13,
    7: 33,
    8: 89,
    9: 240,
    10: 657,
    11: 1806,
    12: 5026,
    13: 13999,
    14: 39260,
}
