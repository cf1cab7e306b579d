import json

import pytest

from hyperembed.config import Config, using
from hyperembed.corpus import build_named, default_corpus
from hyperembed.harness import (
    SweepReport,
    Verdict,
    cases_for,
    lemma_suite,
    reproduce_examples,
    sweep,
    theorem15_hypothesis,
    verify_cor41,
    verify_prop31,
    verify_prop32,
    verify_theorem15,
)
from hyperembed.lattice import normal_subgroups
from hyperembed.permgroup import ValidationError
from hyperembed.series import is_hypercyclically_embedded
from hyperembed.sigma import HallSet, SigmaPartition, complete_hall_sets


def test_trivial_subject_holds(S4, sig):
    v = verify_theorem15(S4, S4.trivial, sig("2|3|*"))
    assert v.status == "holds" and not v.non_vacuous


def test_a5_coarse_gate_closes(A5, sig):
    s = sig("2,3|*")
    for hs in complete_hall_sets(A5, s)[:5]:
        g = theorem15_hypothesis(A5, A5.whole, s, hs)
        assert not g
    with using(Config(d_property="EC")):
        g = theorem15_hypothesis(A5, A5.whole, s, complete_hall_sets(A5, s)[0])
        assert not g and "supersoluble" in g.reason


def test_a4_classical(A4, sig):
    s = sig("2|3|*")
    V4 = A4.subgroup(["(0 1)(2 3)", "(0 2)(1 3)"])
    C3 = A4.subgroup(["(0 1 2)"])
    hs = HallSet.from_members(A4, s, [V4, C3])
    g = theorem15_hypothesis(A4, A4.whole, s, hs)
    assert not g and g.failing.order == 2
    assert verify_theorem15(A4, A4.whole, s).status == "hypothesis_fails"
    assert verify_prop31(A4, s).status == "hypothesis_fails"
    assert verify_prop32(A4, V4, s).status == "hypothesis_fails"
    assert verify_cor41(A4, A4.whole, s).status == "hypothesis_fails"


def test_s3_classical_holds(S3, sig):
    v = verify_theorem15(S3, S3.whole, sig("2|3|*"))
    assert v.status == "holds"
    assert verify_prop31(S3, sig("2,3|*")).status == "holds"


def test_s4_prop32_coarse(S4, sig):
    V4 = [N for N in normal_subgroups(S4) if N.order == 4][0]
    v = verify_prop32(S4, V4, sig("2,3|*"))
    assert v.status == "hypothesis_fails" and "supersoluble" in v.witnesses["reason"]


def test_p_group_prop31(D8, sig):
    assert verify_prop31(D8, sig("2|*")).status == "holds"


def test_vacuous(A5, sig):
    v = verify_theorem15(A5, A5.whole, sig("2,5|*"))
    assert v.status == "vacuous"


def test_non_normal_subject_rejected(S4, sig):
    with pytest.raises(ValidationError):
        verify_theorem15(S4, S4.subgroup(["(0 1)"]), sig("2|3|*"))
    with pytest.raises(ValidationError):
        verify_prop32(S4, S4.subgroup(["(0 1 2)", "(1 2 3)"]), sig("2|3|*"))


def test_consistency_triangle_small(sig):
    # a nonvacuous hold implies hypercyclic embedding
    corpus = [(n, G) for n, G in default_corpus(30)]
    report = sweep(corpus, "theorem15")
    assert report.counterexamples == []
    for v in report.verdicts:
        assert v.status in ("holds", "hypothesis_fails", "vacuous")
    for name, G in corpus:
        for sigma, E in cases_for(G, "theorem15"):
            v = verify_theorem15(G, E, sigma)
            if v.status == "holds":
                assert is_hypercyclically_embedded(G, E)


def test_report_roundtrip_and_determinism():
    corpus = default_corpus(20)
    a = sweep(corpus, "prop31")
    b = sweep(default_corpus(20), "prop31")
    assert a.to_json() == b.to_json()
    again = SweepReport.from_json(a.to_json())
    assert again.to_json() == a.to_json()
    assert sum(a.counts.values()) == len(a.verdicts)
    assert json.loads(a.to_json())["schema"] == 1
    assert "non_vacuous_holds" in a.to_text()


def test_empty_sweep():
    r = sweep([], "theorem15")
    assert r.verdicts == [] and r.counts["counterexample"] == 0


def test_parallel_sweep_matches_serial():
    corpus = default_corpus(16)
    serial = sweep(corpus, "cor41")
    parallel = sweep(default_corpus(16), "cor41", workers=2)
    assert serial.to_json() == parallel.to_json()


def test_verdict_rejects_unknown_status():
    with pytest.raises(ValueError):
        Verdict("theorem15", "G", "*", "maybe")


def test_lemma_suite_small(A4, sig):
    trivial = build_named("cyclic", 1)
    r = lemma_suite(trivial, sig("*"))
    assert r.counterexamples == []
    r = lemma_suite(A4, sig("2,3|*"))
    assert r.counterexamples == [] and r.counts["holds"] > 10


def test_examples_reproduce():
    results = reproduce_examples()
    assert len(results) == 3 and all(r.passed for r in results)
