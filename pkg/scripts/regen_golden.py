"""Rewrite tests/golden/qmatrix_m2_rules.txt from the current rewriting system.

Only run after checking the printed rules by hand against the q-matrix relations.
"""

import pathlib

from yblab import qmatrix as qm


def rules_text(m=2):
    rs = qm.RewriteSystem(m, 1)
    lines = []
    for (a, b), p in sorted(rs.rules.items(), key=lambda t: (rs.rank[t[0][0]], rs.rank[t[0][1]])):
        lines.append("%s -> %s" % (qm.pretty(qm.NCPoly({(a, b): 1})), qm.pretty(p)))
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    path = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden" / "qmatrix_m2_rules.txt"
    path.write_text(rules_text())
    print(path.read_text(), end="")
