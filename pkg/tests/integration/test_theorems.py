"""Corpus-wide checks of the factorization theorems and an end-to-end CLI run."""

import json
import random

import pytest

from analysis.constructions import good_arrangement_from_system, injection_from_good_arrangement, krasner_pairs_in_system
from analysis.scans import analyze_code, scan_corpus
from analysis.sided_sets import enumerate_system
from cli.main import main
from codes.corpus import generate_corpus
from codes.factorizing import build_code_from_PS
from codes.io import write_code
from codes.predicates import is_code, is_maximal, measure
from common.exceptions import NotFactorizingError, ResourceLimitError
from cyclic.factorization import enumerate_factorizations
from cyclic.hajos import hajos_enumerate, is_hajos, krasner_companions

pytestmark = pytest.mark.integration


@pytest.fixture(scope='module')
def corpus():
    """Small deterministic corpus of factorizing codes."""
    return generate_corpus(12, seed=0, max_order=4, max_words=10)


def test_corpus_is_not_empty(corpus):
    """Test that the generator produced codes of every kind."""
    assert len(corpus) > 0
    assert {entry.origin for entry in corpus} <= {'prefix', 'suffix', 'krasner', 'random'}


def test_system_pairs_factorize(corpus):
    """Test that every left set and right set of a maximal code form a factorization."""
    for entry in corpus:
        system = enumerate_system(entry.code, 'a')
        assert system.violations() == [], entry.code.canonical()


@pytest.mark.parametrize('n', [2, 3, 4, 6, 8, 9, 12])
def test_hajos_characterizations_agree(n):
    """Test chain recursion, Krasner companions and the polynomial equations against each other."""
    hajos = {(pair.left, pair.right) for pair in hajos_enumerate(n)}
    factorizations = enumerate_factorizations(n)

    assert hajos <= {(pair.left, pair.right) for pair in factorizations}
    for pair in factorizations:
        in_recursion = (pair.left, pair.right) in hajos
        assert in_recursion == bool(krasner_companions(pair.left, pair.right, n))
        assert in_recursion == is_hajos(pair.left, pair.right, n)


def test_krasner_pairs_give_dominated_injections(corpus):
    """Test good arrangements and injections for every Krasner pair found in a system."""
    checked = 0
    for entry in corpus:
        system = enumerate_system(entry.code, 'a')
        for pair in krasner_pairs_in_system(system):
            for report in analyze_code(entry.code, 'a').separators:
                sep = report.table.separator
                try:
                    arrangement = good_arrangement_from_system(entry.code, sep, pair.left, pair.right, system)
                except ResourceLimitError:
                    continue
                injection = injection_from_good_arrangement(arrangement, pair.left, pair.right)
                assert injection.replay.ok
                checked += 1
    assert checked > 0


def test_triangle_scan(corpus):
    """Test that codes with a Krasner pair in their system satisfy the triangle inequalities."""
    report = scan_corpus(corpus, 'triangle')

    assert report.codes == len(corpus)
    assert report.counts.get('triangle_ok', 0) <= report.counts.get('separators', 0)
    for entry in corpus:
        analysis = analyze_code(entry.code, 'a')
        if analysis.krasner_in_system:
            assert analysis.triangle_ok, entry.code.canonical()


def test_krasner_in_system_scan(corpus):
    """Test that the scan classifies every code."""
    report = scan_corpus(corpus, 'krasner-in-system')

    counts = report.counts
    assert counts.get('with_krasner_pair', 0) + counts.get('without_krasner_pair', 0) == len(corpus)
    assert not report.partial


def test_cli_end_to_end(tmp_path, monkeypatch, capsys, krasner_code):
    """Test check and analyze on a code file written to disk."""
    monkeypatch.setenv('FACTORCODES_CONFIG', str(tmp_path / 'config.json'))
    path = tmp_path / 'code.json'
    write_code(krasner_code, path)

    assert main(['check', str(path)]) == 0
    checked = json.loads(capsys.readouterr().out)
    assert checked['passed']

    assert main(['analyze', str(path)]) == 0
    analyzed = json.loads(capsys.readouterr().out)
    assert analyzed['n'] == 6
    assert analyzed['run']['inputs'] == [str(path)]


def word_set_pairs(count, seed):
    """Seeded pairs (P, S) of short words over {a, b}, both containing the empty word."""
    rng = random.Random(seed)
    pool = ['a', 'b', 'aa', 'ab', 'ba', 'bb', 'aaa', 'aba', 'bab']
    for _ in range(count):
        yield {''} | {w for w in pool if rng.random() < 0.3}, {''} | {w for w in pool if rng.random() < 0.3}


def test_positive_factorizations_give_maximal_codes():
    """Test that every nonnegative P(A - 1)S + 1 over 400 generated (P, S) is a maximal code."""
    built = 0
    for p, s in word_set_pairs(400, seed=17):
        try:
            code = build_code_from_PS(p, s, 'ab').code
        except NotFactorizingError:
            continue

        check = is_code(code)

        assert check, (sorted(p), sorted(s), check.witness)
        assert is_maximal(code), (sorted(p), sorted(s))
        assert measure(code) == 1
        built += 1
    assert built > 0


def test_corpus_factorizations_rebuild_their_codes():
    """Test that the recorded (P, S) of up to 200 generated codes rebuild each code exactly."""
    entries = generate_corpus(200, seed=5, max_order=4, max_words=12)

    assert entries
    for entry in entries:
        rebuilt = build_code_from_PS(entry.p, entry.s, entry.code.alphabet).code
        assert rebuilt == entry.code
        assert is_code(rebuilt)
        assert is_maximal(rebuilt)
