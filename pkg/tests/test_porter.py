"""Tests for the suffix-stripping stemmer."""

import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trolltext.porter import stem_word

# Full-pipeline outputs for the classic rule set.  Several of these words
# exercise one rule in isolation; the rest show how multiple rules compose
# (e.g. "relational": -ational -> -ate, then the trailing-e drop).
VECTORS = [
    # plurals and -ed / -ing
    ("caresses", "caress"),
    ("ponies", "poni"),
    ("ties", "ti"),
    ("caress", "caress"),
    ("cats", "cat"),
    ("feed", "feed"),
    ("agreed", "agre"),
    ("plastered", "plaster"),
    ("bled", "bled"),
    ("motoring", "motor"),
    ("sing", "sing"),
    ("conflated", "conflat"),
    ("troubled", "troubl"),
    ("sized", "size"),
    ("hopping", "hop"),
    ("tanned", "tan"),
    ("falling", "fall"),
    ("hissing", "hiss"),
    ("fizzed", "fizz"),
    ("failing", "fail"),
    ("filing", "file"),
    # y -> i
    ("happy", "happi"),
    ("sky", "sky"),
    # double-suffix collapses
    ("relational", "relat"),
    ("conditional", "condit"),
    ("rational", "ration"),
    ("valenci", "valenc"),
    ("hesitanci", "hesit"),
    ("digitizer", "digit"),
    ("conformabli", "conform"),
    ("radicalli", "radic"),
    ("differentli", "differ"),
    ("vileli", "vile"),
    ("analogousli", "analog"),
    ("vietnamization", "vietnam"),
    ("predication", "predic"),
    ("operator", "oper"),
    ("feudalism", "feudal"),
    ("decisiveness", "decis"),
    ("hopefulness", "hope"),
    ("callousness", "callous"),
    ("formaliti", "formal"),
    ("sensitiviti", "sensit"),
    ("sensibiliti", "sensibl"),
    # -ic-, -full, -ness etc.
    ("triplicate", "triplic"),
    ("formative", "form"),
    ("formalize", "formal"),
    ("electriciti", "electr"),
    ("electrical", "electr"),
    ("hopeful", "hope"),
    ("goodness", "good"),
    # bare-suffix removal in long stems
    ("revival", "reviv"),
    ("allowance", "allow"),
    ("inference", "infer"),
    ("airliner", "airlin"),
    ("gyroscopic", "gyroscop"),
    ("adjustable", "adjust"),
    ("defensible", "defens"),
    ("irritant", "irrit"),
    ("replacement", "replac"),
    ("adjustment", "adjust"),
    ("dependent", "depend"),
    ("adoption", "adopt"),
    ("homologou", "homolog"),
    ("communism", "commun"),
    ("activate", "activ"),
    ("angulariti", "angular"),
    ("homologous", "homolog"),
    ("effective", "effect"),
    ("bowdlerize", "bowdler"),
    # final-e and double-l cleanup
    ("probate", "probat"),
    ("rate", "rate"),
    ("cease", "ceas"),
    ("controll", "control"),
    ("roll", "roll"),
    # words typical of the target corpora
    ("communities", "commun"),
    ("community", "commun"),
    ("happiness", "happi"),
    ("happily", "happili"),
    ("generalizations", "gener"),
    ("oscillators", "oscil"),
    ("disturbances", "disturb"),
    ("conspiracies", "conspiraci"),
    ("immigrants", "immigr"),
    ("primaries", "primari"),
    ("election", "elect"),
    ("elections", "elect"),
    ("politics", "polit"),
    ("political", "polit"),
    ("hashtags", "hashtag"),
    ("gaming", "game"),
    ("news", "new"),
    ("feeds", "feed"),
    ("retweeted", "retweet"),
    ("trolls", "troll"),
    ("trolling", "troll"),
    ("accounts", "account"),
]


@pytest.mark.parametrize("word,expected", VECTORS)
def test_known_stems(word, expected):
    assert stem_word(word) == expected


def test_short_words_unchanged():
    for word in ["", "a", "is", "ax", "by", "no"]:
        assert stem_word(word) == word


def test_same_stem_for_inflections():
    groups = [
        ["connect", "connected", "connecting", "connection", "connections"],
        ["troll", "trolls", "trolling"],
        ["vote", "votes", "voted", "voting"],
    ]
    for group in groups:
        stems = {stem_word(w) for w in group}
        assert len(stems) == 1, f"{group} -> {stems}"


words = st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=24)


@given(words)
def test_stem_never_grows(word):
    assert len(stem_word(word)) <= len(word)


@given(words)
def test_stem_nonempty_and_lowercase(word):
    out = stem_word(word)
    assert out
    assert out == out.lower()
    assert set(out) <= set(string.ascii_lowercase)


@given(words)
def test_stem_deterministic(word):
    assert stem_word(word) == stem_word(word)
