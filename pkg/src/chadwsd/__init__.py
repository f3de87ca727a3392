"""Chain dictionary word sense disambiguation (CHAD) and friends."""

from .disambiguator import (SenseAssignment, TargetSequence, TripletResult,
                            chad, disambiguate_triplet, first_sense_baseline,
                            lesk_disambiguate, render_tag, run_chain)
from .errors import AlignmentError, ChadError, FormatError
from .evaluator import (PrecisionReport, ProgressPoint, compare_measures,
                        precision, progress_trace)
from .lexicon import (Lexeme, Lexicon, PosTag, SenseEntry, StemTable,
                      TaggedToken, load_corpus, load_corpus_sentences,
                      load_lexicon, load_stem_table, preprocess_gloss,
                      save_lexicon, senses_of, stem)
from .measures import (MeasureKind, dice3, jaccard3, lesk_count, overlap3,
                       score2, score3)
from .translator import (BilingualLexicon, Candidate, TranslationChoice,
                         load_bilingual, translate_sentence, translate_triplet)

__version__ = "0.1.0"
