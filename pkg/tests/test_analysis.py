"""Tests for the X* recognizer, systems of factorizations, X_w tables and their arrangements."""

import pytest

from analysis.bayonet_table import (
    check_separator,
    compute_Xw,
    triangle_conjecture_check,
    triangle_property,
)
from analysis.constructions import (
    dominated_injection_exists,
    good_arrangement_from_system,
    injection_from_good_arrangement,
    krasner_pairs_in_system,
    replay_domination_chain,
    separators,
)
from analysis.recognizer import StarRecognizer, build_star_recognizer
from analysis.scans import analyze_code, corollary_scan, scan_corpus
from analysis.sided_sets import (
    SidedSet,
    enumerate_system,
    is_right_completable,
    is_strongly_right_completable,
    left_set_of,
    offset,
    right_set_of,
)
from analysis.zhmain import zhmain_arrangement
from arrangements.bayonet import build_good_arrangement, find_good_arrangement, is_good_arrangement
from arrangements.matrices import BayonetWord as BW
from arrangements.matrices import WordMatrix
from codes.corpus import CorpusEntry
from codes.models import FiniteCode
from common.exceptions import (
    ArrangementError,
    BoundTooSmallError,
    InvalidSeparatorError,
    NoLetterOrderError,
    NotMaximalError,
    PreconditionError,
    SearchBudgetExceededError,
    TheoremViolationError,
)
from cyclic.factorization import is_factorization


@pytest.fixture
def four_prefix_code():
    """{b, ab, aab, aaab, aaaa}: a has order 4."""
    return FiniteCode.of(['b', 'ab', 'aab', 'aaab', 'aaaa'])


@pytest.fixture
def incomplete_code():
    """{ab, b} is a code but not maximal."""
    return FiniteCode.of(['ab', 'b'])


class TestStarRecognizer:
    """Deterministic automaton of X*."""

    def test_prefix_code_states(self, prefix_code):
        recognizer = build_star_recognizer(prefix_code)
        assert len(recognizer) == 2
        assert recognizer.sink() is None
        assert recognizer.accepts('aab')
        assert not recognizer.accepts('a')
        assert recognizer.witness(recognizer.state_of('a')) == 'a'

    def test_sink_state(self, incomplete_code):
        recognizer = StarRecognizer(incomplete_code)
        assert len(recognizer) == 3
        assert recognizer.sink() == 2
        assert recognizer.state_of('aa') == recognizer.sink()

    @pytest.mark.parametrize('words', [['aa', 'ab', 'b'], ['a', 'ab', 'ba'], ['ab', 'b'], ['aaaaaa', 'b', 'baa', 'ab']])
    def test_agrees_with_membership(self, words):
        assert StarRecognizer(FiniteCode.of(words, 'ab')).validate() == []

    def test_residual(self, prefix_code):
        recognizer = StarRecognizer(prefix_code)
        assert recognizer.in_residual('aa')
        assert not recognizer.in_residual('a')


class TestCompletability:
    """Right completable and strongly right completable words."""

    def test_maximal_code(self, prefix_code):
        assert is_strongly_right_completable('', prefix_code)
        assert is_right_completable('a', prefix_code)

    def test_incomplete_code(self, incomplete_code):
        assert not is_strongly_right_completable('', incomplete_code)
        assert is_right_completable('a', incomplete_code)
        assert not is_right_completable('aa', incomplete_code)

    def test_accepts_a_recognizer(self, prefix_code):
        assert is_right_completable('ab', StarRecognizer(prefix_code))


class TestSidedSets:
    """Left sets P and right sets Q of a code for one letter."""

    def test_offset(self, prefix_code):
        assert offset(prefix_code, 2) == 8

    def test_left_sets(self, prefix_code):
        assert left_set_of('', prefix_code, 'a').residues == frozenset({0})
        assert left_set_of('a', prefix_code, 'a').residues == frozenset({1})

    def test_right_set(self, prefix_code):
        right = right_set_of('', prefix_code, 'a')
        assert right == SidedSet('right', frozenset({0, 1}), '', 2)
        assert right.to_json()['residues'] == [0, 1]

    def test_left_set_needs_strong_completability(self, incomplete_code):
        assert left_set_of('', incomplete_code, 'b') is None

    def test_missing_letter_order(self, incomplete_code):
        with pytest.raises(NoLetterOrderError):
            left_set_of('', incomplete_code, 'a')


class TestSystemOfFactorizations:
    """Every pair of a left set and a right set factorizes Z_n."""

    def test_prefix_code(self, prefix_code):
        system = enumerate_system(prefix_code, 'a')
        assert system.n == 2
        assert system.lefts == (frozenset({0}), frozenset({1}))
        assert system.rights == (frozenset({0, 1}),)
        assert system.violations() == []
        assert system.to_json() == {'letter': 'a', 'n': 2, 'lefts': [[0], [1]], 'rights': [[0, 1]]}

    def test_alphabet(self, alphabet_code):
        system = enumerate_system(alphabet_code, 'a')
        assert (system.n, system.lefts, system.rights) == (1, (frozenset({0}),), (frozenset({0}),))

    def test_uniform_code(self, uniform_code):
        system = enumerate_system(uniform_code, 'a')
        assert system.lefts == (frozenset({0}), frozenset({1}))
        assert system.rights == (frozenset({0, 1}),)

    def test_krasner_code(self, krasner_code):
        system = enumerate_system(krasner_code, 'a')
        assert system.n == 6
        assert system.violations() == []
        for p, q in system.pairs():
            assert len(p) * len(q) == 6
            assert is_factorization(p, q, 6)

    def test_generators_rebuild_the_sets(self, prefix_code):
        system = enumerate_system(prefix_code, 'a')
        for p in system.lefts:
            assert left_set_of(system.left_set(p).generator, prefix_code, 'a').residues == p
        for q in system.rights:
            assert right_set_of(system.right_set(q).generator, prefix_code, 'a').residues == q

    def test_not_maximal(self, incomplete_code):
        with pytest.raises(NotMaximalError):
            enumerate_system(incomplete_code, 'b')


class TestBayonetTable:
    """X_w and the triangle inequalities."""

    def test_prefix_code(self, prefix_code):
        table = compute_Xw(prefix_code, 'b', 'a')
        assert table.elements == frozenset({(0, 0), (1, 0)})
        assert [w.word for w in table.words()] == ['b', 'ab']
        assert table.to_json()['Xw'] == [[0, 0], [1, 0]]

    def test_uniform_code(self, uniform_code):
        assert compute_Xw(uniform_code, 'b', 'a').elements == frozenset({(0, 1), (1, 0)})
        assert compute_Xw(uniform_code, 'bb', 'a').elements == frozenset({(0, 0), (1, 1)})

    def test_four_prefix_code(self, four_prefix_code):
        table = compute_Xw(four_prefix_code, 'b', 'a')
        assert table.elements == frozenset({(i, 0) for i in range(4)})

    def test_bound_is_doubled(self, prefix_code):
        assert compute_Xw(prefix_code, 'b', 'a', bound=1, retries=2).bound == 4

    def test_bound_too_small(self, prefix_code):
        with pytest.raises(BoundTooSmallError):
            compute_Xw(prefix_code, 'b', 'a', bound=0, retries=0)

    def test_no_letter_order(self, incomplete_code):
        with pytest.raises(NoLetterOrderError):
            compute_Xw(incomplete_code, 'b', 'a')

    @pytest.mark.parametrize('sep', ['', 'ab', 'ba', 'bc'])
    def test_invalid_separator(self, sep):
        with pytest.raises(InvalidSeparatorError):
            check_separator(sep, 'ab', 'a')

    def test_triangle_property(self, prefix_code):
        assert triangle_property(compute_Xw(prefix_code, 'b', 'a'))
        result = triangle_property([(0, 0), (1, 0), (0, 1)])
        assert not result
        assert result.violating_k == 1
        assert triangle_property([])

    def test_triangle_conjecture_check(self):
        assert triangle_conjecture_check(FiniteCode.of(['b', 'ab']))
        assert not triangle_conjecture_check(FiniteCode.of(['b', 'ab', 'ba']))
        with pytest.raises(PreconditionError):
            triangle_conjecture_check(FiniteCode.of(['aa', 'b']))


class TestZHMainArrangement:
    """X_w laid out along a left set and a right set."""

    def test_prefix_code(self, prefix_code):
        system = enumerate_system(prefix_code, 'a')
        table = compute_Xw(prefix_code, 'b', 'a')
        layout = zhmain_arrangement(
            prefix_code, 'b', system.left_set(frozenset({0})), system.right_set(frozenset({0, 1})), table, system
        )
        assert layout.matrix == WordMatrix.of([[BW(0, 'b', 0), BW(1, 'b', 0)]])
        assert layout.p_sequences == ((0,), (0,))
        assert layout.q_sequences == ((0, 0),)
        assert layout.phi_is_bijection(table)
        assert layout.row_residues() == [frozenset({0, 1})]

    def test_builds_system_and_table_when_missing(self, uniform_code):
        system = enumerate_system(uniform_code, 'a')
        layout = zhmain_arrangement(
            uniform_code, 'b', system.left_set(frozenset({1})), system.right_set(frozenset({0, 1}))
        )
        assert layout.phi_is_bijection(compute_Xw(uniform_code, 'b', 'a'))

    def test_rejects_foreign_left_set(self, prefix_code):
        with pytest.raises(PreconditionError):
            zhmain_arrangement(
                prefix_code, 'b', SidedSet('left', frozenset({0, 1}), '', 2), SidedSet('right', frozenset({0, 1}), '', 2)
            )

    def test_budget(self, prefix_code):
        system = enumerate_system(prefix_code, 'a')
        with pytest.raises(SearchBudgetExceededError):
            zhmain_arrangement(
                prefix_code, 'b', system.left_set(frozenset({0})), system.right_set(frozenset({0, 1})), budget=0
            )


class TestConstructions:
    """Good arrangements from the system and dominated injections."""

    def test_separators(self, prefix_code, uniform_code):
        assert separators(prefix_code, 'a') == ['b']
        assert separators(uniform_code, 'a') == ['b', 'bb']

    def test_krasner_pairs_in_system(self, prefix_code):
        pairs = krasner_pairs_in_system(enumerate_system(prefix_code, 'a'))
        assert [(p.left, p.right) for p in pairs] == [(frozenset({0, 1}), frozenset({0}))]

    def test_good_arrangement_and_injection(self, prefix_code):
        arrangement = good_arrangement_from_system(prefix_code, 'b', {0, 1}, {0})
        assert arrangement == WordMatrix.of([[BW(0, 'b', 0), BW(1, 'b', 0)]])
        injection = injection_from_good_arrangement(arrangement, {0, 1}, {0})
        assert all(source == target for source, target in injection.mapping)
        assert injection.replay.ok
        assert injection.to_json()['replay_ok']

    def test_uniform_code_injection(self, uniform_code):
        arrangement = good_arrangement_from_system(uniform_code, 'b', {0, 1}, {0})
        assert arrangement == WordMatrix.of([[BW(0, 'b', 1), BW(1, 'b', 0)]])
        images = sorted(target.exponents for _, target in injection_from_good_arrangement(arrangement, {0, 1}, {0}).mapping)
        assert images == [(0, 0), (1, 0)]

    @pytest.mark.parametrize('code_name', ['prefix_code', 'uniform_code'])
    def test_constructed_arrangement_is_good(self, request, code_name):
        code = request.getfixturevalue(code_name)
        arrangement = good_arrangement_from_system(code, 'b', {0, 1}, {0})

        assert is_good_arrangement(arrangement, {0, 1}, {0}).ok
        searched = find_good_arrangement(compute_Xw(code, 'b', 'a').words(), {0, 1}, {0})
        assert arrangement == searched

    def test_z6_arrangement_of_xb(self, krasner_code):
        table = compute_Xw(krasner_code, 'b', 'a')

        arrangement = build_good_arrangement(table.words(), {0, 1}, {0, 2, 4})

        assert arrangement == WordMatrix.from_exponents([[(0, 0), (1, 0)], [(0, 2), (1, 2)], [(0, 4), (1, 4)]], 'b')
        assert is_good_arrangement(arrangement, {0, 1}, {0, 2, 4}).ok
        assert arrangement == find_good_arrangement(table.words(), {0, 1}, {0, 2, 4})

    def test_pairs_in_system_of_z6_code(self, krasner_code):
        system = enumerate_system(krasner_code, 'a')
        for pair in krasner_pairs_in_system(system):
            arrangement = good_arrangement_from_system(krasner_code, 'b', pair.left, pair.right, system)
            assert is_good_arrangement(arrangement, pair.left, pair.right).ok

    def test_failed_assembly_carries_bundle(self, mocker, prefix_code):
        mocker.patch('analysis.constructions.build_good_arrangement', side_effect=ArrangementError('blocks differ'))

        with pytest.raises(TheoremViolationError) as excinfo:
            good_arrangement_from_system(prefix_code, 'b', {0, 1}, {0})

        assert excinfo.value.bundle['w'] == 'b'
        assert excinfo.value.bundle['I'] == [0, 1]
        assert excinfo.value.bundle['Xw'] == [[0, 0], [1, 0]]

    def test_z6_injection(self):
        arrangement = WordMatrix.from_exponents([[(0, 0), (1, 0)], [(0, 2), (1, 2)], [(0, 4), (1, 4)]], 'b')
        injection = injection_from_good_arrangement(arrangement, {0, 1}, {0, 2, 4})
        assert all(source == target for source, target in injection.mapping)

    def test_pair_must_be_krasner_and_in_system(self, prefix_code):
        with pytest.raises(PreconditionError):
            good_arrangement_from_system(prefix_code, 'b', {0}, {0})
        with pytest.raises(PreconditionError):
            good_arrangement_from_system(prefix_code, 'b', {0}, {0, 1})

    def test_injection_needs_good_arrangement(self):
        with pytest.raises(PreconditionError):
            injection_from_good_arrangement(WordMatrix.of([[BW(1, 'b', 0), BW(0, 'b', 0)]]), {0, 1}, {0})

    def test_replay_domination_chain(self):
        mapping = [(BW(0, 'b', 0), BW(0, 'b', 0)), (BW(1, 'b', 0), BW(1, 'b', 0))]
        replay = replay_domination_chain(mapping, {0, 1}, {0})
        assert replay.ok
        assert [(r.sources, r.images, r.grid) for r in replay.rows] == [(1, 1, 1), (2, 2, 2)]

    def test_dominated_injection_exists(self):
        assert dominated_injection_exists([(0, 1), (1, 0)], {0, 1}, {0})
        assert not dominated_injection_exists([(0, 0), (0, 1)], {0, 1}, {0})
        assert not dominated_injection_exists([(0, 0), (1, 0), (2, 0)], {0, 1}, {0})


class TestAnalyzeAndCorollaries:
    """Whole-code analyses and corollary replays."""

    def test_analyze_prefix_code(self, prefix_code):
        analysis = analyze_code(prefix_code, 'a')
        assert analysis.triangle_ok
        data = analysis.to_json()
        assert data['n'] == 2
        assert data['krasner_in_system'] == [{'I': [0, 1], 'J': [0]}]
        assert [s['w'] for s in data['separators']] == ['b']
        assert data['separators'][0]['injection_verified']

    def test_analyze_not_maximal(self, incomplete_code):
        with pytest.raises(NotMaximalError):
            analyze_code(incomplete_code, 'b')

    @pytest.mark.parametrize('mode', ['prime', 'singleton', 'omega2', 'pair2'])
    def test_uniform_code(self, uniform_code, mode):
        report = corollary_scan(uniform_code, mode)
        assert report.applicable
        assert report.ok
        assert len(report.separators) == 2

    def test_prime_mode_needs_prime_order(self, four_prefix_code):
        with pytest.raises(PreconditionError):
            corollary_scan(four_prefix_code, 'prime')

    def test_singleton_mode(self, four_prefix_code):
        report = corollary_scan(four_prefix_code, 'singleton')
        assert report.ok
        assert report.separators[0].injection_verified

    def test_unknown_mode(self, prefix_code):
        with pytest.raises(PreconditionError):
            corollary_scan(prefix_code, 'cubic')


class TestScanCorpus:
    """Corpus-wide tallies."""

    def entries(self, *codes):
        return [CorpusEntry(code, frozenset({''}), frozenset({''}), 'prefix') for code in codes]

    def test_krasner_in_system(self, prefix_code, alphabet_code):
        report = scan_corpus(self.entries(prefix_code, alphabet_code), 'krasner-in-system')
        assert report.codes == 2
        assert report.counts == {'with_krasner_pair': 2}
        assert not report.partial
        assert [item['code'] for item in report.items] == sorted(item['code'] for item in report.items)

    def test_triangle(self, prefix_code):
        report = scan_corpus(self.entries(prefix_code), 'triangle')
        assert report.counts['codes_triangle_ok'] == 1

    def test_budget_marks_partial(self, prefix_code, mocker):
        mocker.patch('analysis.scans._scan_item', side_effect=SearchBudgetExceededError('too many'))
        report = scan_corpus(self.entries(prefix_code), 'triangle')
        assert report.partial
        assert report.counts == {'skipped': 1}
        assert report.items[0]['skipped'] == 'too many'

    def test_unknown_mode(self):
        with pytest.raises(PreconditionError):
            scan_corpus([], 'everything')
