"""One test per acceptance criterion, each printed as a PASS/FAIL line in the summary.

Every check is exact equality in exact arithmetic, so the only pinned
tolerances are the runtime limits below.
"""

import time
from collections import Counter

from wittkit.suites import run_suite, table_integrality
from wittkit.witt import universal

SEED = 0
LIMITS = {1: 30.0, 2: 60.0, 3: 60.0, 4: 30.0, 5: 60.0, 6: 30.0, 7: 300.0}
REPORTS = {}


def timed(fn, *args, **kwargs):
    t = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t


def suite(name, **kwargs):
    rep, secs = timed(run_suite, name, seed=SEED, **kwargs)
    REPORTS[(name, tuple(sorted(kwargs.items())))] = rep
    return rep, secs


def groups(rep):
    return Counter(c["name"].split(":")[-1] for c in rep.cases)


def verdict(criterion, number, rep, secs, extra=""):
    j = rep.to_json()
    ok = j["fail_count"] == 0 and j["inconclusive_count"] == 0 and secs <= LIMITS[number]
    detail = (f"{rep.suite}: {j['pass_count']}/{j['case_count']} cases pass, "
              f"{secs:.1f}s <= {LIMITS[number]:.0f}s{extra}")
    criterion(number, ok, detail)
    assert j["fail_count"] == 0, j["failures"][:3]
    assert j["inconclusive_count"] == 0
    assert secs <= LIMITS[number]


def test_criterion_1_witt_laws(criterion):
    rep, secs = suite("witt-laws")
    laws = groups(rep)
    assert len(laws) == 7
    assert all(count >= 200 * 3 for count in laws.values())
    assert rep.params["rings"] == ["Z", "Z/12", "F7"] and rep.params["max_n"] <= 6 and rep.params["max_s"] <= 4
    verdict(criterion, 1, rep, secs, f"; 7 laws x {rep.params['triples']} triples x 3 rings")


def test_criterion_2_universal_polynomial_integrality(criterion):
    universal._star_table.cache_clear()
    universal._frobenius_table.cache_clear()
    try:
        tables, secs = timed(table_integrality, 6)
    except universal.IntegralityError as exc:
        criterion(2, False, f"non-integral coefficient: {exc}")
        raise
    kinds = Counter(kind for kind, _ in tables)
    ok = kinds["star"] == 6 and all(kinds[f"F{s}"] == 6 for s in range(1, 5)) and secs <= LIMITS[2]
    criterion(2, ok, f"{len(tables)} star/F_s tables for n <= 6, s <= 4 integral, "
                     f"{secs:.1f}s <= {LIMITS[2]:.0f}s")
    assert ok


def test_criterion_3_comparison(criterion):
    rep, secs = suite("comparison")
    by_kind = Counter()
    for c in rep.cases:
        by_kind[c["name"].split(":")[1]] += 1
    per_field = Counter(c["name"].split("#")[0] for c in rep.cases if c["name"].endswith(":div"))
    assert set(per_field) == {"F3", "F5", "F7"} and min(per_field.values()) >= 100
    assert by_kind["phi"] and by_kind["phi_hat"] and by_kind["U"]
    verdict(criterion, 3, rep, secs, f"; {min(per_field.values())} div f per field")


def test_criterion_4_hasse_arf(criterion):
    rep, secs = suite("hasse-arf")
    dens = {int(r.split("/")[1]) if "/" in r else 1 for r in rep.params["r"]}
    assert len(rep.cases) >= 1000 and max(dens) <= 5 and dens == {1, 2, 3, 4, 5}
    verdict(criterion, 4, rep, secs, f"; denominators {sorted(dens)}")


def test_criterion_5_transfers(criterion):
    rep, secs = suite("transfers")
    kinds = groups(rep)
    for need in ("Ga=trace", "Gm=det", "W=norm", "u basis independent", "base change", "disjoint union"):
        assert kinds[need] > 0, need
    reduction = {c["name"].split(":")[0] for c in rep.cases if c["name"].endswith("f_*=d s^*")}
    assert {f"F5[x]/(x^{d})" for d in range(1, 5)} <= reduction
    verdict(criterion, 5, rep, secs, f"; bases {rep.params['bases']}, f_*=d s^* for d <= 4")


def test_criterion_6_homotopy_corpus(criterion):
    rep, secs = suite("homotopy-corpus")
    fields = {c["name"].split(":")[0] for c in rep.cases}
    rejected = [c for c in rep.cases if c["name"].endswith("rejected")]
    assert fields == {"F5", "F7", "Q"} and rejected
    verdict(criterion, 6, rep, secs, f"; {len(rejected)} even-s rejections")


def test_criterion_7_drw(criterion):
    t = time.perf_counter()
    rep3, _ = suite("drw-axioms", p=3)
    rep5, _ = suite("drw-axioms", p=5)
    secs = time.perf_counter() - t
    for p, rep in ((3, rep3), (5, rep5)):
        names = [c["name"] for c in rep.cases]
        assert sum(n.startswith("axioms:") for n in names) == 5
        assert any(n.startswith("negative control") for n in names)
        assert {f"lambda injective:W_{n}(F{p})" for n in (1, 2, 3)} <= set(names)
        assert any(n.startswith("level 1 = Kahler") for n in names)
    fd = [c for c in rep3.cases if c["name"].startswith("F^")]
    assert len(fd) == 6
    j3, j5 = rep3.to_json(), rep5.to_json()
    ok = (j3["fail_count"] == j5["fail_count"] == 0 and j3["inconclusive_count"] == j5["inconclusive_count"] == 0
          and secs <= LIMITS[7])
    criterion(7, ok, f"drw-axioms p=3 {j3['pass_count']}/{j3['case_count']}, "
                     f"p=5 {j5['pass_count']}/{j5['case_count']}, {secs:.1f}s <= {LIMITS[7]:.0f}s")
    assert ok, (j3["failures"][:3], j5["failures"][:3])


def test_criterion_8_determinism(criterion):
    names = ["witt-laws", "comparison", "hasse-arf", "transfers", "homotopy-corpus", "drw-axioms"]
    same = {}
    for name in names:
        kwargs = {"p": 3} if name == "drw-axioms" else {}
        key = (name, tuple(sorted(kwargs.items())))
        first = REPORTS.get(key) or run_suite(name, seed=SEED, **kwargs)
        second = run_suite(name, seed=SEED, **kwargs)
        same[name] = first.dumps(full=True) == second.dumps(full=True)
    other = run_suite("hasse-arf", seed=SEED + 1)
    seeded = other.dumps(full=True) != run_suite("hasse-arf", seed=SEED).dumps(full=True)
    ok = all(same.values())
    criterion(8, ok, f"{sum(same.values())}/{len(same)} suites byte-identical on rerun "
                     f"(seed {SEED}); a different seed changes the hasse-arf report: {seeded}")
    assert ok, same
