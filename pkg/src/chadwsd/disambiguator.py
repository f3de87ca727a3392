"""Reduced Lesk, triplet disambiguation and the CHAD chain.

All argmax loops walk candidates in ascending rank order and only replace
the incumbent on a strictly larger score, so ties go to the lexicographically
smallest rank tuple. A best score of exactly zero means "no evidence" and the
affected words fall back to their first dictionary sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .lexicon import CONTENT_POS, Lexeme, Lexicon, PosTag, TaggedToken
from .measures import ZERO, MeasureKind, lesk_count, ratio2, ratio3

UNKNOWN_RANK = 0


@dataclass(frozen=True)
class SenseAssignment:
    lemma: str
    pos: PosTag
    sense_rank: int
    score: Fraction = ZERO
    fallback: bool = False

    @property
    def known(self) -> bool:
        return self.sense_rank != UNKNOWN_RANK

    def tag(self) -> str:
        return render_tag(self.lemma, self.pos, self.sense_rank)

    def to_dict(self) -> dict:
        return {"lemma": self.lemma, "pos": self.pos.tag,
                "rank": self.sense_rank, "score": float(self.score),
                "fallback": self.fallback, "tag": self.tag()}


@dataclass(frozen=True)
class TripletResult:
    assignments: tuple
    best_score: Fraction

    @property
    def ranks(self) -> tuple:
        return tuple(a.sense_rank for a in self.assignments)


class TargetSequence:
    """Corpus tokens restricted to a POS filter, in corpus order."""

    def __init__(self, tokens: Iterable[TaggedToken],
                 pos_filter: Iterable[PosTag] = CONTENT_POS):
        self.pos_filter = frozenset(pos_filter)
        self.tokens = tuple(t for t in tokens if t.pos in self.pos_filter)

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]


def render_tag(lemma: str, pos: PosTag, rank: int) -> str:
    return f"{lemma}#{pos.tag}#{rank}"


def _assign(lx: Lexeme, rank: int, score, fallback=False) -> SenseAssignment:
    return SenseAssignment(lx.lemma, lx.pos, rank, score, fallback)


def _first_sense(lx: Lexeme) -> SenseAssignment:
    return SenseAssignment(lx.lemma, lx.pos, 1, ZERO, True)


def lesk_disambiguate(target: Lexeme, context) -> SenseAssignment:
    best_rank, best = 1, -1
    for s in target.senses:
        n = lesk_count(s.gloss_stems, context)
        if n > best:
            best_rank, best = s.rank, n
    if best == 0:
        return SenseAssignment(target.lemma, target.pos, 1, 0, True)
    return SenseAssignment(target.lemma, target.pos, best_rank, best, False)


def sentence_context(tokens: Sequence[TaggedToken], index: int) -> frozenset:
    """Lemmas of every other token in the sentence, as a context bag."""
    return frozenset(t.lemma for i, t in enumerate(tokens)
                     if i != index and t.lemma)


def disambiguate_triplet(w1: Lexeme, w2: Lexeme, w3: Lexeme,
                         kind: MeasureKind = MeasureKind.OVERLAP) -> TripletResult:
    best = None
    best_ranks = (1, 1, 1)
    for s1, s2, s3 in product(w1.senses, w2.senses, w3.senses):
        score = ratio3(kind, s1.gloss_stems, s2.gloss_stems, s3.gloss_stems)
        if best is None or score > best:
            best, best_ranks = score, (s1.rank, s2.rank, s3.rank)
    if best == 0:
        return TripletResult((_first_sense(w1), _first_sense(w2),
                              _first_sense(w3)), ZERO)
    return TripletResult(tuple(_assign(lx, r, best)
                               for lx, r in zip((w1, w2, w3), best_ranks)), best)


def _disambiguate_pair(w1: Lexeme, w2: Lexeme, kind: MeasureKind) -> tuple:
    best = None
    best_ranks = (1, 1)
    for s1, s2 in product(w1.senses, w2.senses):
        score = ratio2(kind, s1.gloss_stems, s2.gloss_stems)
        if best is None or score > best:
            best, best_ranks = score, (s1.rank, s2.rank)
    if best == 0:
        return _first_sense(w1), _first_sense(w2)
    return _assign(w1, best_ranks[0], best), _assign(w2, best_ranks[1], best)


def _chain_step(prev2, prev1, lx: Lexeme, kind: MeasureKind) -> SenseAssignment:
    best, best_rank = None, 1
    for s in lx.senses:
        score = ratio3(kind, prev2, prev1, s.gloss_stems)
        if best is None or score > best:
            best, best_rank = score, s.rank
    if best == 0:
        return _first_sense(lx)
    return _assign(lx, best_rank, best)


def chain_lexemes(lexemes: Sequence[Lexeme],
                  kind: MeasureKind = MeasureKind.OVERLAP) -> list:
    """CHAD over a run of known lexemes."""
    n = len(lexemes)
    if n == 0:
        return []
    if n == 1:
        return [_first_sense(lexemes[0])]
    if n == 2:
        return list(_disambiguate_pair(lexemes[0], lexemes[1], kind))
    out = list(disambiguate_triplet(*lexemes[:3], kind).assignments)
    chosen = [lx.senses[a.sense_rank - 1].gloss_stems
              for lx, a in zip(lexemes[:3], out)]
    for lx in lexemes[3:]:
        a = _chain_step(chosen[-2], chosen[-1], lx, kind)
        out.append(a)
        chosen.append(lx.senses[a.sense_rank - 1].gloss_stems)
    return out


def _unknown(token: TaggedToken) -> SenseAssignment:
    return SenseAssignment(token.lemma, token.pos, UNKNOWN_RANK, ZERO, False)


def _lookup(lexicon: Lexicon, token: TaggedToken) -> Optional[Lexeme]:
    if token.pos is PosTag.OTHER:
        return None
    return lexicon.get(token.lemma, token.pos)


def chad(seq: Iterable[TaggedToken], lexicon: Lexicon,
         kind: MeasureKind = MeasureKind.OVERLAP) -> list:
    """Disambiguate a filtered token sequence.

    Tokens missing from the lexicon get rank 0 and are invisible to the
    chain: the window for each step is the two nearest preceding known
    tokens.
    """
    tokens = list(seq)
    out: list = [None] * len(tokens)
    known_idx, lexemes = [], []
    for i, tok in enumerate(tokens):
        lx = _lookup(lexicon, tok)
        if lx is None:
            out[i] = _unknown(tok)
        else:
            known_idx.append(i)
            lexemes.append(lx)
    for i, a in zip(known_idx, chain_lexemes(lexemes, kind)):
        out[i] = a
    return out


def first_sense_baseline(seq: Iterable[TaggedToken], lexicon: Lexicon) -> list:
    out = []
    for tok in seq:
        lx = _lookup(lexicon, tok)
        out.append(_unknown(tok) if lx is None else _first_sense(lx))
    return out


def run_chain(sentences: Sequence[Sequence[TaggedToken]], lexicon: Lexicon,
              kind: MeasureKind = MeasureKind.OVERLAP,
              pos_filter: Iterable[PosTag] = CONTENT_POS,
              scope: str = "document", baseline: bool = False) -> list:
    """Disambiguate a corpus, returning one assignment list per sentence.

    ``scope="document"`` runs a single chain across sentence boundaries,
    ``scope="sentence"`` restarts it for each sentence. With ``baseline``
    every known word gets its first sense instead.
    """
    if scope not in ("document", "sentence"):
        raise ValueError(f"unknown chain scope {scope!r}")
    filtered = [list(TargetSequence(s, pos_filter)) for s in sentences]
    if baseline:
        return [first_sense_baseline(s, lexicon) for s in filtered]
    if scope == "sentence":
        return [chad(s, lexicon, kind) for s in filtered]
    flat = chad([t for s in filtered for t in s], lexicon, kind)
    out, pos = [], 0
    for s in filtered:
        out.append(flat[pos:pos + len(s)])
        pos += len(s)
    return out
