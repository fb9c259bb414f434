import itertools
import json
from math import factorial

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from slidergraphs.digraph import connectivity, step_d_induced
from slidergraphs.groups import cyclic_group, symmetric_group
from slidergraphs.slider import induced_slider
from slidergraphs.symbolic import Sft, Sofic, Tmc, aperiodic, circular_admissible, factors, irreducible
from slidergraphs.theorems import (
    Report,
    connect_bound,
    count_debruijn_sequences,
    debruijn_sequence,
    minimal_connecting_step,
    spider_map,
    verify_thm_sch,
    verify_thm_schC,
    verify_thm_spider,
)
from slidergraphs.words import Alphabet

Z2, Z3, Z4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
ABC = Alphabet(3, ("a", "b", "c"))
CHAIN = Tmc(ABC, frozenset({(0, 0), (0, 1), (1, 2), (2, 0)}))
SCH_RANGE = [(n, 2) for n in range(1, 5)] + [(n, 3) for n in range(1, 4)] + [(n, 4) for n in (1, 2)]


def naive_cyclic_windows(seq, n):
    ext = tuple(seq) + tuple(seq[: n - 1])
    return [ext[i:i + n] for i in range(len(seq))]


def naive_count(m, n):
    """Every cyclic word of length m**n with distinct windows, divided by its m**n rotations."""
    total = sum(
        1 for s in itertools.product(range(m), repeat=m ** n)
        if len(set(naive_cyclic_windows(s, n))) == m ** n
    )
    assert total % m ** n == 0
    return total // m ** n


class TestReport:
    def test_text(self):
        r = Report("sch", {"n": 2, "B": 2}, True, {"vertices": "4/4"}, "ok")
        assert r.to_text() == "theorem: sch\nparams: n=2 B=2\ncounts: vertices=4/4\nresult: PASS\nwitness: ok\n"

    def test_json(self):
        r = Report("spider", {"n": 3}, False, {}, "bad")
        data = json.loads(r.to_json())
        assert data == {"theorem": "spider", "params": {"n": 3}, "passed": False, "counts": {}, "witness": "bad"}


class TestSchreierTheorems:
    @pytest.mark.parametrize("n,m", SCH_RANGE)
    def test_sch(self, n, m):
        r = verify_thm_sch(n, cyclic_group(m))
        assert r.passed, r.witness
        assert r.counts["vertices"] == f"{m ** n}/{m ** n}"
        assert r.counts["arrows"] == f"{m ** (n + 1)}/{m ** (n + 1)}"

    @pytest.mark.parametrize(
        "n,b,k",
        [(3, Z3, [1]), (2, Z4, [1, 3]), (2, symmetric_group(3), [1]), (3, Z2, [0]), (2, symmetric_group(3), [1, 2, 5])],
    )
    def test_schc(self, n, b, k):
        r = verify_thm_schC(n, b, k)
        assert r.passed, r.witness

    def test_schc_labels_in_params(self):
        assert verify_thm_schC(2, Z4, [3, 1, 3]).params["K"] == "1,3"


class TestSpider:
    def test_z2_n3(self):
        r = verify_thm_spider(3, Z2, [0, 1])
        assert r.passed and r.counts == {"vertices": "24/24", "arrows": "48/48"}

    def test_z3_n2_single(self):
        r = verify_thm_spider(2, Z3, [1])
        assert r.passed and r.counts == {"vertices": "18/18", "arrows": "18/18"}

    @pytest.mark.parametrize("n,b", [(1, Z3), (2, Z2), (2, symmetric_group(3)), (4, Z2)])
    def test_more(self, n, b):
        assert verify_thm_spider(n, b, range(b.order)).passed

    def test_map_is_bijection(self):
        f = spider_map(3, Z2)
        assert len(f) == len(set(f.values())) == 24
        assert f["0|000"] == "(0,000)"


class TestConnectBound:
    def test_golden_mean(self):
        assert connect_bound(Tmc.golden_mean()) == 6

    def test_chain(self):
        # b -> c has walks of length 1 and of every length >= 4, nothing between
        a = np.array([[1, 1, 0], [0, 0, 1], [1, 0, 0]])
        powers = [np.linalg.matrix_power(a, k) > 0 for k in range(1, 6)]
        assert [p.all() for p in powers] == [False, False, False, True, True]
        assert connect_bound(CHAIN) == 2 * 4 + 2

    def test_full(self):
        assert connect_bound(Tmc.full(2)) == 4

    def test_periodic_chain_has_no_bound(self):
        assert connect_bound(Tmc(ABC, frozenset({(0, 1), (1, 2), (2, 0)}))) is None

    def test_sft_recoded(self):
        assert connect_bound(Sft(Alphabet(2), frozenset({(1, 1, 1)}))) is not None

    def test_sofic_none(self):
        s = Sofic(Alphabet(2), 1, frozenset({(0, 0, 0), (0, 0, 1)}))
        assert connect_bound(s) is None


def step_oracle(spec, n, mode):
    """Least d found with step_d_induced on the factor graph, scanning upwards."""
    a = spec.alphabet
    ambient = induced_slider(factors(spec, n), a)
    x = {a.format(w) for w in circular_admissible(spec, n)}
    for d in range(1, ambient.num_vertices + 1):
        if len(connectivity(step_d_induced(ambient, x, d), mode)) == 1:
            return d
    return None


@st.composite
def primitive_tmcs(draw):
    m = draw(st.integers(1, 4))
    pairs = draw(st.sets(st.tuples(st.integers(0, m - 1), st.integers(0, m - 1)), min_size=1))
    spec = Tmc(Alphabet(m), frozenset(pairs))
    assume(irreducible(spec) and aperiodic(spec))
    return spec


class TestMinimalStep:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_full_shift(self, n):
        r = minimal_connecting_step(Tmc.full(2), n)
        assert r.d_min == 1 and r.ambient_vertices == r.periodic_vertices == 2 ** n

    @pytest.mark.parametrize("n", range(3, 9))
    def test_golden_mean(self, n):
        r = minimal_connecting_step(Tmc.golden_mean(), n)
        assert r.d_min == 1 and r.bound == 6

    @pytest.mark.parametrize("n,expected", list(zip(range(3, 9), [2, 1, 2, 2, 2, 2])))
    def test_kautz(self, n, expected):
        r = minimal_connecting_step(Tmc.kautz(3), n)
        assert r.d_min == expected == step_oracle(Tmc.kautz(3), n, "weak")

    def test_chain(self):
        r = minimal_connecting_step(CHAIN, 3)
        assert r.periodic_vertices == 4 and r.d_min is not None
        assert r.d_min == step_oracle(CHAIN, 3, "weak")

    def test_periodic_chain_unbounded(self):
        cyc = Tmc(ABC, frozenset({(0, 1), (1, 2), (2, 0)}))
        r = minimal_connecting_step(cyc, 3, "strong")
        assert r.bound is None and r.d_min == 1

    def test_cutoff(self):
        # two loops never connect
        r = minimal_connecting_step(Tmc(Alphabet(2), frozenset({(0, 0), (1, 1)})), 3, cutoff=20)
        assert r.d_min is None and r.cutoff == 20

    def test_empty(self):
        with pytest.raises(ValueError, match="no circularly"):
            minimal_connecting_step(Tmc(Alphabet(2), frozenset({(0, 1)})), 3)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            minimal_connecting_step(Tmc.full(2), 3, "both")

    def test_text(self):
        text = minimal_connecting_step(Tmc.golden_mean(), 3).to_text()
        assert "d_min: 1\n" in text and "bound: 6\n" in text

    @settings(max_examples=40, deadline=None)
    @given(primitive_tmcs(), st.integers(3, 8), st.sampled_from(["weak", "strong"]))
    def test_primitive_within_bound(self, spec, n, mode):
        assume(circular_admissible(spec, n))
        r = minimal_connecting_step(spec, n, mode)
        assert r.d_min is not None and r.d_min <= r.bound
        if n <= 6:
            assert r.d_min == step_oracle(spec, n, mode)


class TestDeBruijnSequence:
    def test_binary_three(self):
        assert debruijn_sequence(2, 3) == (0, 1, 0, 1, 1, 1, 0, 0)

    @pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (2, 5), (3, 3), (4, 2), (5, 1)])
    def test_every_window_once(self, m, n):
        seq = debruijn_sequence(m, n)
        assert len(seq) == m ** n
        assert sorted(naive_cyclic_windows(seq, n)) == list(itertools.product(range(m), repeat=n))

    def test_bad_args(self):
        with pytest.raises(ValueError):
            debruijn_sequence(1, 3)


class TestCount:
    @pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)])
    def test_naive(self, m, n):
        assert count_debruijn_sequences(m, n) == naive_count(m, n)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_binary_formula(self, n):
        assert count_debruijn_sequences(2, n) == 2 ** (2 ** (n - 1) - n)

    @pytest.mark.parametrize("m,n", [(3, 2), (4, 2), (2, 4)])
    def test_general_formula(self, m, n):
        assert count_debruijn_sequences(m, n) == factorial(m) ** (m ** (n - 1)) // m ** n

    def test_cap(self):
        with pytest.raises(ValueError, match="limited"):
            count_debruijn_sequences(2, 5)
