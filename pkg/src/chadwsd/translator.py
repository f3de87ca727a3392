"""Lexical choice for word-by-word translation through disambiguation.

Each source word has a list of target-language candidates. The first three
translatable words are resolved jointly: every candidate combination is
disambiguated as a triplet and the best-scoring combination wins. Later
words are chained the same way CHAD chains senses, with the search running
over (candidate, sense) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .disambiguator import UNKNOWN_RANK, disambiguate_triplet
from .errors import FormatError
from .lexicon import Lexeme, Lexicon, PosTag, normalize_word
from .measures import ZERO, MeasureKind, ratio2, ratio3


@dataclass(frozen=True)
class Candidate:
    lemma: str
    pos: PosTag


class BilingualLexicon:
    def __init__(self, entries=None):
        self.entries = {}
        for src, cands in (entries or {}).items():
            self.add(src, cands)

    def add(self, source: str, candidates) -> None:
        cur = self.entries.setdefault(source, [])
        for c in candidates:
            if c not in cur:
                cur.append(c)

    def get(self, source: str) -> Optional[list]:
        return self.entries.get(source)

    def __contains__(self, source):
        return source in self.entries

    def __len__(self):
        return len(self.entries)


def load_bilingual(path) -> BilingualLexicon:
    bi = BilingualLexicon()
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2 or not cols[0].strip():
                raise FormatError("expected 'source<TAB>cand:pos,...'", path, lineno)
            cands = []
            for item in cols[1].split(","):
                lemma, sep, pos_text = item.strip().rpartition(":")
                if not sep or not lemma.strip():
                    raise FormatError(f"bad candidate {item.strip()!r}", path, lineno)
                try:
                    pos = PosTag.parse(pos_text)
                except ValueError:
                    pos = PosTag.OTHER
                if pos is PosTag.OTHER:
                    raise FormatError(f"bad candidate pos {pos_text!r}", path, lineno)
                cands.append(Candidate(lemma.strip().lower(), pos))
            bi.add(normalize_word(cols[0]) or cols[0].strip().lower(), cands)
    return bi


@dataclass(frozen=True)
class TranslationChoice:
    source_word: str
    target_lemma: str
    pos: PosTag
    sense_rank: int
    synonyms: tuple = ()
    score: Fraction = ZERO
    fallback: bool = False

    def render(self, source_label="Rom", target_label="Eng") -> str:
        if not self.target_lemma:
            return f"Word: ({source_label}){self.source_word} ({target_label})?"
        lemma = self.target_lemma[:1].upper() + self.target_lemma[1:]
        text = (f"Word: ({source_label}){self.source_word} "
                f"({target_label}){lemma}#{self.pos.tag}#{self.sense_rank}")
        if self.synonyms:
            text += " :{" + ", ".join(self.synonyms) + "}"
        return text

    def to_dict(self) -> dict:
        return {"source": self.source_word, "target": self.target_lemma,
                "pos": self.pos.tag, "rank": self.sense_rank,
                "synonyms": list(self.synonyms), "score": float(self.score),
                "fallback": self.fallback}


def render_choices(choices, source_label="Rom", target_label="Eng") -> str:
    return " , ".join(c.render(source_label, target_label) for c in choices)


def _choice(src, lx: Lexeme, rank, score=ZERO, fallback=False):
    return TranslationChoice(src, lx.lemma, lx.pos, rank,
                             lx.senses[rank - 1].synonyms, score, fallback)


def _untranslated(src, bi):
    cands = bi.get(src)
    if cands:
        return TranslationChoice(src, cands[0].lemma, cands[0].pos, UNKNOWN_RANK)
    return TranslationChoice(src, "", PosTag.OTHER, UNKNOWN_RANK)


def _known_candidates(src, bi, lex) -> list:
    return [lx for c in (bi.get(src) or ())
            if (lx := lex.get(c.lemma, c.pos)) is not None]


def _best_triplet(src3, options3, kind):
    best, best_res, best_lx = None, None, None
    for combo in product(*options3):
        res = disambiguate_triplet(*combo, kind)
        if best is None or res.best_score > best:
            best, best_res, best_lx = res.best_score, res, combo
    return [_choice(s, lx, a.sense_rank, a.score, a.fallback)
            for s, lx, a in zip(src3, best_lx, best_res.assignments)]


def _best_pair(src2, options2, kind):
    best, best_pick = None, None
    for lx1, lx2 in product(*options2):
        for s1, s2 in product(lx1.senses, lx2.senses):
            score = ratio2(kind, s1.gloss_stems, s2.gloss_stems)
            if best is None or score > best:
                best, best_pick = score, ((lx1, s1.rank), (lx2, s2.rank))
    if best == 0:
        return [_choice(s, opts[0], 1, ZERO, True) for s, opts in zip(src2, options2)]
    return [_choice(s, lx, r, best) for s, (lx, r) in zip(src2, best_pick)]


def _chain_step(src, options, prev2, prev1, kind):
    best, pick = None, None
    for lx in options:
        for s in lx.senses:
            score = ratio3(kind, prev2, prev1, s.gloss_stems)
            if best is None or score > best:
                best, pick = score, (lx, s.rank)
    if best == 0:
        return _choice(src, options[0], 1, ZERO, True)
    return _choice(src, pick[0], pick[1], best)


def translate_triplet(r1: str, r2: str, r3: str, bi: BilingualLexicon,
                      lex: Lexicon, kind: MeasureKind = MeasureKind.OVERLAP) -> list:
    src = (r1, r2, r3)
    options = [_known_candidates(s, bi, lex) for s in src]
    if all(options):
        return _best_triplet(src, options, kind)
    return [_choice(s, opts[0], 1, ZERO, True) if opts else _untranslated(s, bi)
            for s, opts in zip(src, options)]


def translate_sentence(words: Sequence[str], bi: BilingualLexicon, lex: Lexicon,
                       kind: MeasureKind = MeasureKind.OVERLAP) -> list:
    """Chain-style lexical choice over a whole sentence.

    Words without a lexicon-known candidate get a rank-0 choice and are
    skipped by the chain, like unknown words in :func:`chad`.
    """
    out: list = [None] * len(words)
    idx, srcs, options = [], [], []
    for i, w in enumerate(words):
        opts = _known_candidates(w, bi, lex)
        if opts:
            idx.append(i)
            srcs.append(w)
            options.append(opts)
        else:
            out[i] = _untranslated(w, bi)
    n = len(srcs)
    if n == 1:
        chosen = [_choice(srcs[0], options[0][0], 1, ZERO, True)]
    elif n == 2:
        chosen = _best_pair(srcs, options, kind)
    elif n >= 3:
        chosen = _best_triplet(srcs[:3], options[:3], kind)
        glosses = [_gloss(c, lex) for c in chosen]
        for s, opts in zip(srcs[3:], options[3:]):
            c = _chain_step(s, opts, glosses[-2], glosses[-1], kind)
            chosen.append(c)
            glosses.append(_gloss(c, lex))
    else:
        chosen = []
    for i, c in zip(idx, chosen):
        out[i] = c
    return out


def _gloss(choice: TranslationChoice, lex: Lexicon) -> frozenset:
    return lex.get(choice.target_lemma, choice.pos).senses[choice.sense_rank - 1].gloss_stems
