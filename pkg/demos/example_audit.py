"""Audit of the three-point pair with no continuous surjection.

X has opens {a}, {b}, {a,b}; Y has opens {c}, {b,c}, {a,c}.  Every claim
about the pair is recomputed, and the two that do not survive are printed.
"""

from fintop.theorems import audit_example2, example2_spaces

x, y = example2_spaces()
for finding in audit_example2(x, y):
    mark = "ok " if finding["agrees"] else "!! "
    print(f"{mark}({finding['item']}) {finding['claimed']}")
    print(f"      observed: {finding['observed']}")
    if "offending_points" in finding:
        print(f"      surjections checked: {finding['surjections_checked']}, "
              f"offending points: {finding['offending_points']}")
