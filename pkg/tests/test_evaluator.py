import random

import pytest
from hypothesis import given, strategies as st

from chadwsd.disambiguator import SenseAssignment
from chadwsd.errors import AlignmentError, FormatError
from chadwsd.evaluator import (TABLE_COLUMNS, PrecisionReport, ProgressPoint,
                               compare_measures, precision, progress_trace,
                               read_report_json, read_report_tsv, read_trace_tsv,
                               sort_reports, write_report_json, write_report_tsv,
                               write_trace_tsv)
from chadwsd.lexicon import (CONTENT_POS, Lexeme, Lexicon, PosTag, TaggedToken,
                             load_corpus_sentences)
from chadwsd.measures import MeasureKind

N, V = PosTag.NOUN, PosTag.VERB


def gold_tokens(ranks, pos=N):
    return [TaggedToken(f"w{i}", f"w{i}", pos, r) for i, r in enumerate(ranks)]


def assigned(ranks, pos=N):
    return [SenseAssignment(f"w{i}", pos, r) for i, r in enumerate(ranks)]


def as_assignments(gold):
    return [SenseAssignment(t.lemma, t.pos, t.gold_sense or 1) for t in gold]


class TestPrecision:
    def test_self_comparison(self):
        gold = gold_tokens([1, 2, 3, 1, 1, 4, 2, 1, 1, 5])
        r = precision(as_assignments(gold), gold)
        assert (r.evaluated, r.correct, r.precision) == (10, 10, 1.0)

    def test_three_of_four(self):
        r = precision(assigned([1, 2, 1, 1]), gold_tokens([1, 2, 1, 3]))
        assert r.precision == 0.75

    def test_no_gold(self):
        r = precision(assigned([1, 1]), gold_tokens([None, None]))
        assert r.evaluated == 0 and r.precision is None and not r.defined

    def test_unknown_excluded(self):
        r = precision(assigned([1, 0, 2]), gold_tokens([1, 1, 1]))
        assert (r.evaluated, r.correct) == (2, 1)
        r = precision(assigned([1, 0, 2]), gold_tokens([1, 1, 1]), include_unknown=True)
        assert (r.evaluated, r.correct) == (3, 1)

    def test_pos_filter_applied_to_gold(self):
        gold = gold_tokens([1, 2]) + gold_tokens([3], V)
        r = precision(assigned([1, 2]), gold, {N})
        assert r.precision == 1.0

    def test_alignment_error(self):
        with pytest.raises(AlignmentError):
            precision(assigned([1]), gold_tokens([1, 1]))

    @given(st.lists(st.one_of(st.none(), st.integers(1, 6)), max_size=40))
    def test_gold_against_itself(self, ranks):
        gold = gold_tokens(ranks)
        r = precision(as_assignments(gold), gold)
        assert r.precision == (1.0 if any(x is not None for x in ranks) else None)


class TestProgressTrace:
    def test_two(self):
        assert progress_trace(assigned([1, 2]), gold_tokens([1, 1])) == [
            ProgressPoint(1, 1.0), ProgressPoint(2, 0.5)]

    def test_empty(self):
        assert progress_trace([], []) == []

    def test_three(self):
        pts = progress_trace(assigned([2, 1, 2]), gold_tokens([2, 2, 2]))
        assert [p.index for p in pts] == [1, 2, 3]
        assert [p.running_precision for p in pts] == pytest.approx([1.0, 0.5, 2 / 3], abs=1e-12)

    @given(st.lists(st.tuples(st.integers(0, 3), st.one_of(st.none(), st.integers(1, 3))),
                    max_size=60))
    def test_consistency(self, pairs):
        a = assigned([p[0] for p in pairs])
        g = gold_tokens([p[1] for p in pairs])
        pts = progress_trace(a, g)
        rep = precision(a, g)
        assert len(pts) == rep.evaluated
        if pts:
            assert abs(pts[-1].running_precision - rep.precision) <= 1e-12
        for prev, cur in zip(pts, pts[1:]):
            assert abs(cur.running_precision - prev.running_precision) <= 1 / cur.index + 1e-15


class TestCompareMeasures:
    def test_toy_all_rank_one(self, toy_lexicon, data_dir):
        sents = load_corpus_sentences(data_dir / "toy_corpus.tsv")
        r = compare_measures(sents, toy_lexicon, CONTENT_POS, "toy")
        assert r.per_measure == {k: 1.0 for k in MeasureKind}
        assert r.baseline_precision == 1.0
        assert r.evaluated == 4

    def test_forced_fallback(self):
        lex = Lexicon([Lexeme.from_glosses(f"w{i}", N, [{f"a{i}"}, {f"b{i}"}])
                       for i in range(5)])
        gold = gold_tokens([2] * 5)
        r = compare_measures([gold], lex)
        assert all(v == 0.0 for v in r.per_measure.values())
        assert r.baseline_precision == 0.0

    def test_flat_token_list(self, toy_lexicon):
        toks = [TaggedToken(w, w, p, 1) for w, p in
                [("bass", N), ("catch", V), ("river", N), ("play", V)]]
        assert compare_measures(toks, toy_lexicon).precision == 1.0


class TestSerialization:
    def reports(self):
        return [
            PrecisionReport("Bra02", frozenset({N}), 479, 363, 0.758,
                            {MeasureKind.DICE: 0.735, MeasureKind.JACCARD: 0.731,
                             MeasureKind.OVERLAP: 0.758}, 0.808),
            PrecisionReport("Bra01", frozenset({N}), 3, 2, 2 / 3,
                            {MeasureKind.DICE: 1 / 3, MeasureKind.JACCARD: 0.1,
                             MeasureKind.OVERLAP: 2 / 3}, 0.8),
            PrecisionReport("empty", CONTENT_POS, 0, 0, None,
                            {k: None for k in MeasureKind}, None),
        ]

    def test_tsv_columns_and_round_trip(self, tmp_path):
        path = tmp_path / "r.tsv"
        write_report_tsv(self.reports(), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert tuple(lines[0].split("\t")) == TABLE_COLUMNS
        assert lines[3] == "empty\t0\tNA\tNA\tNA\tNA"
        back = read_report_tsv(path)
        for a, b in zip(self.reports(), back):
            assert (a.file_label, a.evaluated, a.per_measure, a.baseline_precision) == (
                b.file_label, b.evaluated, b.per_measure, b.baseline_precision)

    def test_tsv_bad_header(self, tmp_path):
        p = tmp_path / "r.tsv"
        p.write_text("File\tWords\n", encoding="utf-8")
        with pytest.raises(FormatError):
            read_report_tsv(p)

    def test_json_round_trip(self, tmp_path):
        write_report_json(self.reports(), tmp_path / "r.json")
        assert read_report_json(tmp_path / "r.json") == self.reports()

    def test_sorted_descending_by_overlap(self):
        assert [r.file_label for r in sort_reports(self.reports()[::-1])] == [
            "Bra02", "Bra01", "empty"]

    def test_trace_round_trip(self, tmp_path):
        rng = random.Random(1)
        a = assigned([rng.randint(1, 3) for _ in range(50)])
        g = gold_tokens([rng.randint(1, 3) for _ in range(50)])
        pts = progress_trace(a, g)
        write_trace_tsv(pts, tmp_path / "t.tsv")
        assert read_trace_tsv(tmp_path / "t.tsv") == pts
