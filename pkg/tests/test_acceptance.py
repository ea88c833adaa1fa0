"""Acceptance criteria.  Each test prints one PASS/FAIL line.

Most criteria reuse the verify suites and then pin the exact counts.
"""

from math import comb, factorial

import pytest

from yblab import qmatrix as qm, quantumybe as qy, transcomb as tc, uqsl2
from yblab.scalars import RationalFunctionQ as Q
from yblab.suites import SUITES, RunConfig


@pytest.fixture
def verdict(capsys):
    def report(number, label, ok, detail=""):
        with capsys.disabled():
            print("\n%s criterion %d: %s%s" % ("PASS" if ok else "FAIL", number, label,
                                               " (%s)" % detail if detail else ""))
        assert ok, detail
    return report


def run(suite, **kw):
    return SUITES[suite][0](RunConfig(**kw))


def failing(recs):
    return [r["name"] for r in recs if r["status"] != "pass"]


def by_name(recs):
    return {r["name"]: r for r in recs}


def test_criterion_01_table(verdict):
    recs = run("table-1")
    spot = (tc.stirling_transitive(5, 2), tc.stirling_transitive(6, 3), tc.stirling_transitive(7, 4))
    ok = not failing(recs) and spot == (59, 756, 6700)
    verdict(1, "Stirling table rows n = 2..7", ok, "failing %s, spot %s" % (failing(recs), spot))


def test_criterion_02_polynomiality(verdict):
    recs = run("counts")
    ok = not failing(recs) and [tc.p_poly_eval(n, 2) for n in range(2, 7)] == [factorial(n) for n in range(2, 7)]
    ok = ok and [tc.p_poly_eval(n, 3) for n in (4, 5, 6)] == [99, 771, 6693]
    ok = ok and [tc.p_poly_eval(n, 4) for n in (4, 5, 6)] == [256, 2704, 31192]
    verdict(2, "direct counts equal p_n(|C|) for n = 2..6", ok, "failing %s" % failing(recs))


def test_criterion_03_bitransitive(verdict):
    recs = run("bitransitive")
    got = [r["counts"]["B_n"] for r in recs]
    stirling_sum = [sum(tc.stirling2(n, k) * 2 ** k * factorial(k) for k in range(1, n + 1)) for n in range(1, 7)]
    ok = not failing(recs) and got == stirling_sum == [2, 10, 74, 730, 9002, 133210]
    verdict(3, "B_n for n = 1..6", ok, "got %s" % got)


def test_criterion_04_columns(verdict):
    cat = [tc.stirling_transitive(n, n - 1) for n in range(4, 8)]
    col = [tc.stirling_transitive(n, n - 2) for n in range(4, 8)]
    closed = [(n - 2) * comb(2 * n - 3, n) + comb(2 * n - 4, n) for n in range(4, 8)]
    ok = cat == [tc.catalan(n - 1) for n in range(4, 8)] and col == closed == [11, 69, 364, 1770]
    verdict(4, "Catalan and n-2 columns for n = 4..7", ok, "n-2 column %s" % col)


def test_criterion_05_bijections(verdict):
    recs = run("bijections")
    sizes = [r["counts"]["distinct"] for r in recs if r["name"].startswith("signed-perms")]
    ok = not failing(recs) and sizes == [2 ** n * factorial(n) for n in range(1, 6)] \
        and sum(r["name"].startswith("sigma-roundtrip") for r in recs) == 6
    verdict(5, "signed permutation bijections", ok, "sizes %s" % sizes)


def test_criterion_06_classical_conjecture(verdict):
    recs = by_name(run("conj-cybe", family="standard-classical"))
    totals = [recs["cybe-scan-standard-classical-n%d" % n]["counts"] for n in (3, 4)]
    ok = all(r["status"] == "pass" for r in recs.values()) \
        and [(t["total"], t["passed"]) for t in totals] == [(74, 74), (730, 730)]
    verdict(6, "standard gl_2 family, n = 3 and 4", ok, str(totals))


def test_criterion_07_takiff_conjecture(verdict):
    recs = run("conj-cybe", family="takiff")
    fam, scan = recs
    ok = fam["name"] == "family-takiff" and fam["status"] == "pass" and scan["status"] == "pass" \
        and (scan["counts"]["total"], scan["counts"]["passed"]) == (231, 231)
    verdict(7, "Takiff family triples and 231 matrices", ok, str(scan["counts"]))


def test_criterion_08_classical_twists(verdict):
    recs = run("rcd-cybe")
    names = {r["name"] for r in recs}
    ok = not failing(recs) and {"rcd-standard-classical-n4", "rcd-takiff-n3", "diag-embed-takiff"} <= names
    verdict(8, "r(c,d) solves CYBE with cobracket axioms", ok, "failing %s" % failing(recs))


def test_criterion_09_key_identity(verdict):
    recs = by_name(run("key-identity"))
    want = ["key-identity-%s-m%d" % (f, m) for f in ("standard-classical", "takiff") for m in (2, 3)]
    ok = all(recs[k]["status"] == "pass" and recs[k]["counts"]["total"] > 0 for k in want)
    verdict(9, "classical key identity, m = 2, 3, both families", ok)


def test_criterion_10_quantum_twists(verdict):
    recs = by_name(run("rcd-qybe", family="standard-quantum"))
    conj = recs["signed-perm-conjugation-quantum"]["counts"]["total"]
    ok = all(r["status"] == "pass" for r in recs.values()) and "Rcd-standard-quantum-n3" in recs \
        and conj == sum(2 ** n * factorial(n) for n in (1, 2, 3))
    verdict(10, "R(c,d) solves QYBE for n <= 3, signed permutation identity", ok, "failing %s" % failing(recs.values()))


def test_criterion_11_quantum_conjecture(verdict):
    rep = qy.conjecture_quantum_scan(qy.standard_family(2), 3)
    ok = (rep.total, rep.passed, rep.failed) == (74, 74, 0)
    verdict(11, "74/74 transitive matrices give QYBE solutions at n = 3", ok, "%d/%d" % (rep.passed, rep.total))


def test_criterion_12_braid_identity(verdict):
    recs = by_name(run("braid-identity"))
    fams = ("standard-quantum", "uqsl2")
    ok = all(recs["braid-%s-m%d" % (f, m)]["status"] == "pass" for f in fams for m in (2, 3))
    fails = sum(recs["braid-%s-m%d-nontransitive" % (f, m)]["counts"]["failing"] for f in fams for m in (2, 3))
    verdict(12, "braid identity on transitive inputs, non-transitive failure found", ok and fails > 0,
            "%d non-transitive failures" % fails)


def test_criterion_13_uqsl2(verdict):
    recs = run("uqsl2", ell=3)
    scan = qy.conjecture_quantum_scan(uqsl2.uqsl2_family(3), 2)
    res = uqsl2.counterexample_check(3)
    rd = uqsl2.RootData(3)
    q = rd.q(1)
    want = q ** 2 * (q ** 4 - rd.one())
    ok = not failing(recs) and (scan.total, scan.passed) == (52, 52) and res["coefficient"] == want \
        and want != rd.zero()
    verdict(13, "u_q(sl_2) at ell = 3", ok, "scan %d/%d, failing %s" % (scan.passed, scan.total, failing(recs)))


def test_criterion_14_quantum_matrices(verdict):
    recs = run("qmatrix", m=2)
    q = Q.q()
    h = q - q ** -1
    wit = qm.nonisom_witness(2, 2, 1)
    ok = not failing(recs) and wit == {(((2, 2),), ((1, 1),)): h, (((1, 1),), ((2, 2),)): -h} \
        and qm.at_q(wit, 1) == {}
    verdict(14, "quantum matrices, m = 2", ok, "failing %s" % failing(recs))


def test_criterion_15_semiclassical(verdict):
    recs = run("semiclassical", m=2)
    verdict(15, "semiclassical limits, n = 1 and 2", not failing(recs), "failing %s" % failing(recs))


def test_criterion_16_poisson(verdict):
    recs = run("poisson", m=2)
    takiff = [r for r in recs if r["name"].startswith("takiff")]
    documented = all(r["counts"]["trials"] > r["counts"]["degree_bound"] for r in takiff)
    ok = not failing(recs) and len(takiff) > 0 and documented \
        and by_name(recs)["nontransitive-jacobi"]["counts"]["jacobi"] == 0
    verdict(16, "Poisson tables, det centrality, Takiff point checks", ok, "failing %s" % failing(recs))
