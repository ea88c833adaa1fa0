"""Verification suites run by the command line driver.

Each suite takes a RunConfig and returns a list of check records
{name, anchor, status, counts, witnesses}.  Records are built in a fixed
order so that reports are reproducible for a given configuration.
"""

from dataclasses import dataclass
from itertools import product
from math import factorial

from . import transcomb as tc

# <K_n, k> for 2 <= n <= 9, 1 <= k < n
REFERENCE_TABLE = {
    2: [1],
    3: [1, 2],
    4: [1, 11, 5],
    5: [1, 59, 69, 14],
    6: [1, 359, 756, 364, 42],
    7: [1, 2519, 7954, 6700, 1770, 132],
    8: [1, 20159, 84444, 109032, 49215, 8217, 429],
    9: [1, 181439, 919572, 1683550, 1150105, 321937, 37037, 1430],
}
# number of transitive arrays on I_n with 3 and 4 colors, n = 2..8
ARRAYS_3 = [3, 15, 99, 771, 6693, 62841, 627621]
ARRAYS_4 = [4, 28, 256, 2704, 31192, 381928, 4885336]
BITRANSITIVE = [2, 10, 74, 730, 9002, 133210]

FAMILIES = ("standard-classical", "takiff", "standard-quantum", "uqsl2")


@dataclass
class RunConfig:
    command: str = "verify"
    suite: str = "all"
    family: str = None
    n: int = None
    m: int = None
    ell: int = 3
    colors: int = None
    tier: str = "required"
    seed: int = 0
    fmt: str = "json"
    out: str = None

    def validate(self):
        if self.tier not in ("required", "stretch"):
            raise ValueError("tier must be required or stretch")
        if self.family is not None and self.family not in FAMILIES:
            raise ValueError("unknown family %r" % self.family)
        if self.n is not None and not 1 <= self.n <= 9:
            raise ValueError("n out of range")
        if self.m is not None and not 1 <= self.m <= 4:
            raise ValueError("m out of range")
        if self.ell is not None and self.ell <= 2:
            raise ValueError("ell must exceed 2")
        if self.colors is not None and not 1 <= self.colors <= 6:
            raise ValueError("colors out of range")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        return self

    @property
    def stretch(self):
        return self.tier == "stretch"


def record(name, anchor, ok, counts=None, witnesses=None):
    return {"name": name, "anchor": anchor, "status": "pass" if ok else "fail",
            "counts": dict(counts or {}), "witnesses": [str(w) for w in (witnesses or [])]}


def _tally(name, anchor, results, expect=True):
    """results: iterable of (key, ok).  Passes when every ok equals expect."""
    total = good = 0
    bad = []
    for key, ok in results:
        total += 1
        if bool(ok) == expect:
            good += 1
        elif len(bad) < 5:
            bad.append(key)
    return record(name, anchor, good == total, {"total": total, "passed": good}, bad)


def _ns(cfg, default, stretch_extra=()):
    if cfg.n is not None:
        return [cfg.n]
    return list(default) + (list(stretch_extra) if cfg.stretch else [])


def _wants(cfg, family):
    return cfg.family is None or cfg.family == family


# ---------------------------------------------------------------- combinatorics

def suite_table_1(cfg):
    out = []
    top = cfg.n or (9 if cfg.stretch else 7)
    for n in range(2, top + 1):
        got = [tc.stirling_transitive(n, k) for k in range(1, n)]
        out.append(record("table-row-%d" % n, "generalized Stirling numbers <K_n,k>",
                          got == REFERENCE_TABLE[n], {"k_max": n - 1}, [] if got == REFERENCE_TABLE[n] else [got]))
    for n in range(2, min(top, 6) + 1):
        ok = all(tc.stirling_transitive(n, k) == tc.stirling_transitive_by_surjections(n, k) for k in range(1, n))
        out.append(record("surjection-crosscheck-%d" % n, "surjective colorings / k!", ok))
    out.append(_tally("catalan-column", "<K_n,n-1> = Catalan(n-1)",
                      ((n, tc.stirling_transitive(n, n - 1) == tc.catalan(n - 1)) for n in range(2, top + 1))))
    out.append(_tally("n-minus-2-column", "<K_n,n-2> closed form",
                      ((n, tc.stirling_transitive(n, n - 2) == tc.conj_n_minus_2(n)) for n in range(4, top + 1))))
    return out


def suite_counts(cfg):
    out = []
    ns = _ns(cfg, range(2, 7))
    for n in ns:
        for x in (2, 3, 4):
            direct = sum(1 for _ in tc.enumerate_transitive_arrays(n, x))
            out.append(record("arrays-n%d-colors%d" % (n, x), "direct count vs sum_k <K_n,k>(x)_k",
                              direct == tc.p_poly_eval(n, x), {"direct": direct}))
        ok = tc.p_poly_eval(n, 2) == factorial(n) and tc.p_poly_eval(n, 3) == ARRAYS_3[n - 2] \
            and tc.p_poly_eval(n, 4) == ARRAYS_4[n - 2]
        out.append(record("p-values-%d" % n, "p_n(2) = n!, p_n(3), p_n(4) sequences", ok))
    return out


def suite_bitransitive(cfg):
    out = []
    for n in _ns(cfg, range(1, 7)):
        direct = sum(1 for _ in tc.enumerate_transitive_matrices(n, 2))
        ok = direct == tc.bitransitive_count(n) == BITRANSITIVE[n - 1] and (n < 2 or tc.q_poly_eval(n, 2) == direct)
        out.append(record("bitransitive-%d" % n, "B_n by enumeration and by Stirling sum", ok, {"B_n": direct}))
    return out


def suite_bijections(cfg):
    from itertools import permutations
    out = []
    for n in _ns(cfg, range(1, 7)):
        ok = all(tc.perm_of_sigma(tc.sigma_of_perm(w)) == w for w in permutations(range(1, n + 1)))
        out.append(record("sigma-roundtrip-%d" % n, "w <-> sigma_w", ok, {"perms": factorial(n)}))
        if n <= 5:
            eps = {tc.eps_of_signed_perm(s) for s in tc.all_signed_perms(n)}
            cls = {a for a in tc.enumerate_transitive_matrices(n, palette=[1, -1]) if a.is_almost_skew()}
            ok = len(eps) == 2 ** n * factorial(n) and eps == cls
            out.append(record("signed-perms-%d" % n, "eps(w,d) exhausts transitive almost-skew matrices",
                              ok, {"distinct": len(eps), "class": len(cls)}))
    return out


# ---------------------------------------------------------------- classical

def _classical_families(cfg):
    from . import lietensor as lt
    fams = []
    if _wants(cfg, "standard-classical"):
        fams.append(lt.standard_classical_family(cfg.m or 2))
    if _wants(cfg, "takiff"):
        fams.append(lt.takiff_family(cfg.m or 2))
    return fams


def suite_conj_cybe(cfg):
    from . import lietensor as lt
    out = []
    for fam in _classical_families(cfg):
        out.append(_tally("family-%s" % fam.name, "transitive CYBE on admissible triples",
                          ((t, lt.transitive_cybe_check(fam, *t)) for t in lt.admissible_triples(fam.palette))))
        ns = _ns(cfg, (3, 4) if fam.name == "standard-classical" else (3,))
        for n in ns:
            rep = lt.conjecture_classical_scan(fam, n)
            out.append(record("cybe-scan-%s-n%d" % (fam.name, n), "transitive matrices give CYBE solutions",
                              rep.failed == 0, {"total": rep.total, "passed": rep.passed,
                                                "quasi_invariant": rep.quasi_invariant}, rep.witnesses[:5]))
    return out


def suite_rcd_cybe(cfg):
    from . import lietensor as lt
    out = []
    for fam in _classical_families(cfg):
        top = cfg.n or (4 if fam.name == "standard-classical" else 3)
        for n in range(2, top + 1):
            res = []
            for c in tc.enumerate_transitive_arrays(n, palette=fam.palette):
                for d in product(fam.palette, repeat=n):
                    r = lt.build_rcd(fam, c, d)
                    ok = lt.cybe(r).is_zero() and all(lt.cobracket_axioms_check(r).values())
                    res.append(((c.entries, d), ok))
            out.append(_tally("rcd-%s-n%d" % (fam.name, n), "twisted r(c,d) solves CYBE, cobracket axioms", res))
        if fam.name == "standard-classical":
            res = []
            for n in range(1, min(top, 3) + 1):
                for s in tc.all_signed_perms(n):
                    res.append(((s.w, s.d), lt.build_rcd(fam, tc.sigma_of_perm(s.w), s.d)
                                == lt.build_r_matrix(fam, tc.eps_of_signed_perm(s))))
            out.append(_tally("signed-perm-conjugation-classical", "r(sigma_w,d) = r^(eps(w,d))", res))
        res = []
        for n in range(2, min(top, 3) + 1):
            for c in tc.enumerate_transitive_arrays(n, palette=fam.palette):
                for x in range(fam.alg.dim):
                    res.append(((c.entries, x), lt.diag_embed_check(fam, c, x)))
        out.append(_tally("diag-embed-%s" % fam.name, "diagonal map intertwines cobrackets", res))
    return out


def suite_key_identity(cfg):
    from . import lietensor as lt
    out = []
    for fam in _classical_families(cfg):
        for m in ([cfg.n] if cfg.n else (1, 2, 3)):
            res = []
            for g in tc.enumerate_transitive_arrays(m, palette=fam.palette):
                for a in product(fam.palette, repeat=m):
                    if tc.is_transitive_array(tc.restrict_extend(g, "extend", a)):
                        res.append(((g.entries, a), lt.key_identity_check(fam, g, a)))
            out.append(_tally("key-identity-%s-m%d" % (fam.name, m), "classical key identity", res))
    return out


# ---------------------------------------------------------------- quantum

def _quantum_families(cfg):
    from . import quantumybe as qy
    fams = []
    if _wants(cfg, "standard-quantum"):
        fams.append(qy.standard_family(cfg.m or 2))
    if _wants(cfg, "uqsl2"):
        from . import uqsl2
        fams.append(uqsl2.uqsl2_family(cfg.ell))
    return fams


def suite_rcd_qybe(cfg):
    from . import quantumybe as qy
    out = []
    for fam in _quantum_families(cfg):
        if fam.name == "uqsl2":
            top = cfg.n or 2
        else:
            top = cfg.n or (4 if cfg.stretch else 3)
        for n in range(1, top + 1):
            res = []
            for c in tc.enumerate_transitive_arrays(n, palette=fam.palette):
                for d in product(fam.palette, repeat=n):
                    res.append(((c.entries, d), qy.qybe_check(qy.build_Rcd(fam, c, list(d)))))
            out.append(_tally("Rcd-%s-n%d" % (fam.name, n), "twisted R(c,d) solves QYBE", res))
        if fam.name != "uqsl2":
            res = []
            for n in range(1, min(top, 3) + 1):
                for s in tc.all_signed_perms(n):
                    res.append(((s.w, s.d), qy.build_R_product(fam, tc.eps_of_signed_perm(s))
                                == qy.build_Rcd(fam, tc.sigma_of_perm(s.w), list(s.d))))
            out.append(_tally("signed-perm-conjugation-quantum", "R^(eps(w,d)) = R(sigma_w,d)", res))
            res = []
            for n in range(2, 5):
                for c in tc.enumerate_transitive_arrays(n, palette=fam.palette):
                    J = qy.build_Jc(fam, c)
                    res.append((c.entries, J == qy.build_Jc_rec_minus(fam, c) == qy.build_Jc_rec_plus(fam, c)))
            out.append(_tally("Jc-recursions", "both recursions reproduce J_c", res))
    return out


def suite_conj_qybe(cfg):
    from . import quantumybe as qy
    out = []
    for fam in _quantum_families(cfg):
        if fam.name == "uqsl2":
            ns = _ns(cfg, (2,))
        else:
            ns = _ns(cfg, (3,), (4,))
        for n in ns:
            rep = qy.conjecture_quantum_scan(fam, n)
            out.append(record("qybe-scan-%s-n%d" % (fam.name, n), "transitive matrices give QYBE solutions",
                              rep.failed == 0, {"total": rep.total, "passed": rep.passed}, rep.witnesses[:5]))
    return out


def suite_braid_identity(cfg):
    from . import quantumybe as qy
    out = []
    for fam in _quantum_families(cfg):
        for m in ([cfg.n] if cfg.n else (2, 3)):
            res, neg = [], []
            for g in tc.enumerate_transitive_arrays(m, palette=fam.palette):
                for a in product(fam.palette, repeat=m):
                    trans = tc.is_transitive_array(tc.restrict_extend(g, "extend", a))
                    ok = qy.braid_identity_check(fam, g, a, require_transitive=False)
                    (res if trans else neg).append(((g.entries, a), ok))
            out.append(_tally("braid-%s-m%d" % (fam.name, m), "compressed braid relation, transitive inputs", res))
            fails = [k for k, ok in neg if not ok]
            out.append(record("braid-%s-m%d-nontransitive" % (fam.name, m),
                              "some non-transitive input breaks the relation (informational)",
                              True, {"nontransitive": len(neg), "failing": len(fails)}, fails[:3]))
    return out


def suite_uqsl2(cfg):
    from . import uqsl2
    ell = cfg.ell
    V = uqsl2.build_module(ell)
    out = []
    for N in range(1, 5):
        rel = uqsl2.relations_check(V, N)
        out.append(record("relations-V%d" % N, "u_q(sl_2) relations on tensor powers", all(rel.values()),
                          {k: int(v) for k, v in rel.items()}))
    q = uqsl2.qybe_members_check(ell)
    out.append(_tally("members-qybe", "each R^(eps,eps') solves QYBE", q.items()))
    out.append(_tally("intertwiner", "R Delta(h) = Delta^op(h) R", uqsl2.intertwiner_check(ell).items()))
    out.append(record("tau-inverse", "R^(eps,-eps') = tau(R^(eps,eps'))^-1", uqsl2.tau_inverse_check(ell)))
    out.append(record("distinct-members", "operators on V, eps acts trivially (informational)", True,
                      {"distinct": len(uqsl2.distinct_members(ell))}))
    out.append(_tally("transitive-triples", "mixed QYBE on admissible triples",
                      uqsl2.transitive_triples_check(ell).items()))
    out.append(_tally("diag-embed-quantum", "diagonal embedding identity on V^{xn}, n <= 3",
                      uqsl2.diag_embed_check(ell, 3).items()))
    try:
        res = uqsl2.counterexample_check(ell)
        out.append(record("counterexample", "twists not related by leg permutation", True,
                          {}, ["coefficient %r" % (res["coefficient"],)]))
    except AssertionError as e:
        out.append(record("counterexample", "twists not related by leg permutation", False, {}, [e]))
    return out


# ---------------------------------------------------------------- q-matrices, limits, Poisson

def suite_qmatrix(cfg):
    from . import qmatrix as qm
    out = []
    m = cfg.m or 2
    systems = [("A_q", qm.RewriteSystem(m, 1, tc.TransArray(1, ())))]
    for w in ((1, 2), (2, 1)):
        systems.append(("A_q^{x2,%s}" % "".join(map(str, w)), qm.RewriteSystem(m, 2, tc.sigma_of_perm(w))))
    for name, rs in systems:
        out.append(record("confluence-%s" % name, "rewriting system is confluent", qm.confluence_check(rs)))
    out.append(record("rule-compatibility", "R-form respects the defining relations", qm.rule_compatibility_check(m)))
    out.append(record("coquasi-braiding", "R-form braids the product", qm.coquasi_braiding_check(m)))
    for n in (2, 3):
        res = []
        for c in tc.enumerate_transitive_arrays(n, palette=[1, -1]):
            ok = qm.confluence_check(qm.RewriteSystem(m, n, c)) and qm.associativity_check(c, m) \
                and qm.mult_hom_check(c, m)
            res.append((c.entries, ok))
        out.append(_tally("bullet-n%d" % n, "twisted product associative and multiplicative", res))
    wit = qm.nonisom_witness(m, 2, 1)
    ok = wit == qm.expected_nonisom(2, 1) and not qm.at_q(wit, 1)
    out.append(record("nonisom-witness", "flip does not identify the two twisted products", ok,
                      {"terms": len(wit)}, [sorted(wit.items())]))
    return out


def suite_semiclassical(cfg):
    from . import qmatrix as qm
    m = cfg.m or 2
    out = [record("limit-n1", "commutator/(q-1/q) at q=1 is the Poisson bracket", qm.semiclassical_check(1, m))]
    res = [(c.entries, qm.semiclassical_check(2, m, c)) for c in tc.enumerate_transitive_arrays(2, palette=[1, -1])]
    out.append(_tally("limit-n2", "twisted limit is the bracket of -c", res))
    out.append(record("limit-n2-reversed", "twisted limit at sigma_id is the bracket after leg reversal",
                      qm.semiclassical_check(2, m, reverse_legs=True)))
    return out


def suite_poisson(cfg):
    from . import poisson as po
    out = []
    m = cfg.m or 2
    for n in ((cfg.n,) if cfg.n else (1, 2, 3)):
        arrays = list(tc.enumerate_transitive_arrays(n, palette=[1, -1])) if n > 1 else [tc.TransArray(1, ())]
        res = []
        for c in arrays:
            tb = po.bowtie_table_Amn(n, m, c)
            cf = po.build_bracket_Amn(n, m, c)
            ok = tb.is_skew() and po.jacobi_check(tb) and po.tables_equal(tb, cf) and po.mult_hom_check(n, m, c, tb)
            res.append((c.entries, ok))
        out.append(_tally("A-tensor-n%d" % n, "skew, Jacobi, closed form, multiplicativity", res))
    out.append(record("det-central", "det Poisson-commutes with generators", po.det_central_check(m)))
    bad = po.bowtie_table_Amn(3, m, tc.TransArray(3, (1, -1, 1)))
    ok, wit = po.jacobi_check(bad, witness=True)
    out.append(record("nontransitive-jacobi", "non-transitive array breaks Jacobi (informational)", True,
                      {"jacobi": int(ok)}, [wit]))
    for n in (1, 2):
        arrays = list(tc.enumerate_transitive_arrays(n, palette=[0, 1, 2])) if n > 1 else [None]
        for c in arrays:
            tb = po.build_takiff_tables(2, n, c)
            disp = po.takiff_displayed_table(2, n, tc.TransArray(2, tuple(-x for x in c.entries)) if c else None)
            for ident in ("skew", "jacobi", "consistency"):
                r = po.numeric_point_check(tb, ident, 2, n, seed=cfg.seed, other=disp)
                out.append(record("takiff-n%d-%s-%s" % (n, c.entries if c else "", ident),
                                  "Takiff bracket at exact random points", r.ok,
                                  {"trials": r.trials, "checked": r.checked, "degree_bound": r.degree_bound,
                                   "sample_size": r.sample_size, "symbolic_zero": r.symbolic_zero},
                                  [r.witness] if r.witness else []))
    return out


SUITES = {
    "table-1": (suite_table_1, "table of generalized Stirling numbers <K_n,k>, k < n"),
    "counts": (suite_counts, "counting polynomials p_n and their values"),
    "bitransitive": (suite_bitransitive, "B_n: bitransitive relations"),
    "bijections": (suite_bijections, "signed permutations and almost-skew matrices"),
    "conj-cybe": (suite_conj_cybe, "conjecture: transitive matrices give CYBE solutions"),
    "rcd-cybe": (suite_rcd_cybe, "twisted classical r-matrices r(c,d)"),
    "key-identity": (suite_key_identity, "classical key identity"),
    "rcd-qybe": (suite_rcd_qybe, "twisted quantum R-matrices R(c,d)"),
    "conj-qybe": (suite_conj_qybe, "conjecture: transitive matrices give QYBE solutions"),
    "braid-identity": (suite_braid_identity, "compressed braid relation"),
    "uqsl2": (suite_uqsl2, "small quantum group at a root of unity"),
    "qmatrix": (suite_qmatrix, "quantum matrices and twisted products"),
    "semiclassical": (suite_semiclassical, "semiclassical limits"),
    "poisson": (suite_poisson, "Poisson brackets on matrix and Takiff algebras"),
}


def list_suites():
    return ["%s (%s)" % (k, v[1]) for k, v in SUITES.items()]
