from __future__ import annotations

from fractions import Fraction

import pytest

from curvkit.generators import example_tree
from curvkit.verify import VerifyConfig, run, tree_corpus


@pytest.mark.parametrize("suite", ["identities", "comparisons", "oracles", "bounds"])
def test_small_suites_pass(suite):
    result = run(VerifyConfig(suite=suite, n_range=(2, 12), count=8, seed=3))
    assert result.reports and not result.failed and not result.flagged


def test_suite_on_example_tree():
    result = run(VerifyConfig(suite="comparisons", alphas=[Fraction(1, 2)], graph=example_tree()))
    eq = [r for r in result.reports if r.theorem == "comparison-equality"]
    assert len(eq) == 1 and eq[0].passed
    assert dict(eq[0].witnesses)["checked"] == 9


def test_worker_count_does_not_change_output():
    cfg = dict(suite="all", n_range=(2, 10), count=6, seed=9)
    one = [r.line() for r in run(VerifyConfig(workers=1, **cfg)).reports]
    many = [r.line() for r in run(VerifyConfig(workers=8, **cfg)).reports]
    assert one == many


def test_invalid_range():
    with pytest.raises(ValueError):
        run(VerifyConfig(suite="identities", n_range=(1, 5), count=1))
    with pytest.raises(ValueError):
        run(VerifyConfig(suite="nope"))


def test_corpus_mixes_weights():
    corpus = tree_corpus(6, (5, 9), seed=1, weights="mixed")
    assert all(g.is_unit_weight for g in corpus[0::2])
    assert not any(g.is_unit_weight for g in corpus[1::2])
