#!/usr/bin/env python3
"""Regenerate the bundled test fixtures under tests/data/.

Instances, references, predictions, and pipeline inputs are authored here
as data; parses for supporting-fact sentences are hand-written token
tables (form, pos, head, deprel) in the 10-column annotation format.
Run from the repository root: python3 tools/make_fixtures.py
"""

import json
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

# ---------------------------------------------------------------------------
# Instances: (id, question, answer, [(title, [sentences], [sf flags])...])

INSTANCES = [
    ("q0001", "Were Scott Derrickson and Ed Wood of the same nationality?", "yes", [
        ("Scott Derrickson",
         ["Scott Derrickson is an American director, screenwriter and producer.",
          "He lives in Los Angeles."],
         [True, False]),
        ("Ed Wood",
         ["Ed Wood was an American filmmaker.",
          "He made many films."],
         [True, False]),
    ]),
    ("q0002", "The director of the film Big Stone Gap is based in what New York city?",
     "Greenwich Village", [
        ("Big Stone Gap (film)",
         ["Big Stone Gap is a film directed by Adriana Trigiani.",
          "The film premiered in 2014."],
         [True, False]),
        ("Adriana Trigiani",
         ["Adriana Trigiani is an author based in Greenwich Village, New York City.",
          "Trigiani has published a novel a year since 2000."],
         [True, False]),
    ]),
    ("q0003", "The arena where the Lewiston Maineiacs played their home games is in what city?",
     "Lewiston", [
        ("Lewiston Maineiacs",
         ["The Lewiston Maineiacs were a junior ice hockey team.",
          "The team played its home games at the Androscoggin Bank Colisee."],
         [False, True]),
        ("Androscoggin Bank Colisee",
         ["The Androscoggin Bank Colisee is an arena in Lewiston."],
         [True]),
    ]),
    ("q0004", "Return to Olympus is an album by a band formed in what year?", "1980", [
        ("Return to Olympus",
         ["Return to Olympus is the only album by the American rock band Malfunkshun."],
         [True]),
        ("Malfunkshun",
         ["Malfunkshun was formed in 1980.",
          "Andrew Wood was the lead singer of Malfunkshun."],
         [True, True]),
    ]),
    ("q0005", "Alder Creek flows into a lake of what kind?", "a natural lake", [
        ("Alder Creek",
         ["Alder Creek is a stream in Oregon.",
          "Alder Creek flows into Lost Lake."],
         [True, True]),
        ("Lost Lake",
         ["Lost Lake is a natural lake."],
         [True]),
    ]),
    ("q0006", "The founder of Corvid Press holds what nationality?", "Canadian", [
        ("Corvid Press",
         ["Corvid Press is a publishing house founded by Mary Holt."],
         [True]),
        ("Mary Holt",
         ["Mary Holt is a Canadian editor."],
         [True]),
    ]),
    ("q0007", "The architect of Barton Hall was of what nationality?", "English", [
        ("Barton Hall",
         ["Barton Hall is a concert venue designed by John Barton."],
         [True]),
        ("John Barton",
         ["John Barton was an English architect."],
         [True]),
    ]),
    ("q0008", "Denham Reef lies near a bay in what state?", "Western Australia", [
        ("Denham Reef",
         ["Denham Reef is a coral reef near Shark Bay."],
         [True]),
        ("Shark Bay",
         ["Shark Bay is a bay in Western Australia."],
         [True]),
    ]),
    ("q0009", "Ellery Pond is inside a park in what state?", "Maine", [
        ("Ellery Pond",
         ["Ellery Pond is a pond in Acadia National Park."],
         [True]),
        ("Acadia National Park",
         ["Acadia National Park is a park in Maine."],
         [True]),
    ]),
    ("q0010", "The folk band Foxglove Lane comes from a city in what country?", "Ireland", [
        ("Foxglove Lane",
         ["Foxglove Lane is a folk band from Galway."],
         [True]),
        ("Galway",
         ["Galway is a city in Ireland."],
         [True]),
    ]),
]

# ---------------------------------------------------------------------------
# References: id -> three derivations, steps as [article, sentence, h, r, t]
# (1-based indices). Wording varies across the three annotators.

REFERENCES = {
    "q0001": [
        [[1, 1, "Scott Derrickson", "is", "an American director"],
         [2, 1, "Ed Wood", "was", "an American filmmaker"]],
        [[1, 1, "Scott Derrickson", "is", "American"],
         [2, 1, "Ed Wood", "was", "American"]],
        [[1, 1, "Scott Derrickson", "is", "an American director, screenwriter and producer"],
         [2, 1, "Ed Wood", "was", "an American filmmaker"]],
    ],
    "q0002": [
        [[1, 1, "Big Stone Gap", "is directed by", "Adriana Trigiani"],
         [2, 1, "Adriana Trigiani", "is from", "Greenwich Village, New York City"]],
        [[1, 1, "Big Stone Gap", "was directed by", "Adriana Trigiani"],
         [2, 1, "Adriana Trigiani", "is based in", "Greenwich Village"]],
        [[1, 1, "Adriana Trigiani", "directed", "Big Stone Gap"],
         [2, 1, "Adriana Trigiani", "is based in", "Greenwich Village, New York City"]],
    ],
    "q0003": [
        [[1, 2, "Lewiston Maineiacs", "played at", "Androscoggin Bank Colisee"],
         [2, 1, "Androscoggin Bank Colisee", "is in", "Lewiston"]],
        [[1, 2, "the Lewiston Maineiacs", "played home games at", "the Androscoggin Bank Colisee"],
         [2, 1, "the Androscoggin Bank Colisee", "is an arena in", "Lewiston"]],
        [[1, 2, "Lewiston Maineiacs", "played their home games at", "Androscoggin Bank Colisee"],
         [2, 1, "Androscoggin Bank Colisee", "is located in", "Lewiston"]],
    ],
    "q0004": [
        [[1, 1, "Return to Olympus", "is an album by", "Malfunkshun"],
         [2, 1, "Malfunkshun", "was formed in", "1980"]],
        [[1, 1, "Return to Olympus", "is the only album by", "Malfunkshun"],
         [2, 1, "Malfunkshun", "was formed in", "1980"]],
        [[1, 1, "Return to Olympus", "is an album by", "the American rock band Malfunkshun"],
         [2, 1, "Malfunkshun", "formed in", "1980"]],
    ],
    "q0005": [
        [[1, 2, "Alder Creek", "flows into", "Lost Lake"],
         [2, 1, "Lost Lake", "is", "a natural lake"]],
        [[1, 2, "Alder Creek", "flows into", "Lost Lake"],
         [2, 1, "Lost Lake", "is", "natural"]],
        [[1, 2, "Alder Creek", "empties into", "Lost Lake"],
         [2, 1, "Lost Lake", "is", "a natural lake"]],
    ],
    "q0006": [
        [[1, 1, "Corvid Press", "was founded by", "Mary Holt"],
         [2, 1, "Mary Holt", "is", "a Canadian editor"]],
        [[1, 1, "Corvid Press", "was founded by", "Mary Holt"],
         [2, 1, "Mary Holt", "is", "Canadian"]],
        [[1, 1, "Mary Holt", "founded", "Corvid Press"],
         [2, 1, "Mary Holt", "is", "a Canadian editor"]],
    ],
    "q0007": [
        [[1, 1, "Barton Hall", "was designed by", "John Barton"],
         [2, 1, "John Barton", "was", "an English architect"]],
        [[1, 1, "Barton Hall", "was designed by", "John Barton"],
         [2, 1, "John Barton", "was", "English"]],
        [[1, 1, "John Barton", "designed", "Barton Hall"],
         [2, 1, "John Barton", "was", "an English architect"]],
    ],
    "q0008": [
        [[1, 1, "Denham Reef", "is near", "Shark Bay"],
         [2, 1, "Shark Bay", "is in", "Western Australia"]],
        [[1, 1, "Denham Reef", "is a coral reef near", "Shark Bay"],
         [2, 1, "Shark Bay", "is a bay in", "Western Australia"]],
        [[1, 1, "Denham Reef", "lies near", "Shark Bay"],
         [2, 1, "Shark Bay", "is located in", "Western Australia"]],
    ],
    "q0009": [
        [[1, 1, "Ellery Pond", "is in", "Acadia National Park"],
         [2, 1, "Acadia National Park", "is in", "Maine"]],
        [[1, 1, "Ellery Pond", "is a pond in", "Acadia National Park"],
         [2, 1, "Acadia National Park", "is a park in", "Maine"]],
        [[1, 1, "Ellery Pond", "is inside", "Acadia National Park"],
         [2, 1, "Acadia National Park", "is located in", "Maine"]],
    ],
    "q0010": [
        [[1, 1, "Foxglove Lane", "is from", "Galway"],
         [2, 1, "Galway", "is in", "Ireland"]],
        [[1, 1, "Foxglove Lane", "is a folk band from", "Galway"],
         [2, 1, "Galway", "is a city in", "Ireland"]],
        [[1, 1, "Foxglove Lane", "comes from", "Galway"],
         [2, 1, "Galway", "is located in", "Ireland"]],
    ],
}

# Predictions: one derivation per id; a realistic mix of exact matches,
# paraphrases, dropped steps, and an extra irrelevant step.

PREDICTIONS = {
    "q0001": [[1, 1, "Scott Derrickson", "is", "an American director"],
              [2, 1, "Ed Wood", "was", "an American filmmaker"]],
    "q0002": [[1, 1, "Big Stone Gap", "is directed by", "Adriana Trigiani"],
              [2, 1, "Adriana Trigiani", "lives in", "Greenwich Village"]],
    "q0003": [[1, 2, "Lewiston Maineiacs", "played at", "Androscoggin Bank Colisee"]],
    "q0004": [[1, 1, "Return to Olympus", "is an album by", "Malfunkshun"],
              [2, 1, "Malfunkshun", "was formed in", "1980"],
              [2, 2, "Andrew Wood", "was the lead singer of", "Malfunkshun"]],
    "q0005": [[1, 2, "Alder Creek", "runs into", "Lost Lake"],
              [2, 1, "Lost Lake", "is", "a natural lake"]],
    "q0006": [[1, 1, "Corvid Press", "was started by", "Mary Holt"],
              [2, 1, "Mary Holt", "is", "a Canadian editor"]],
    "q0007": [[1, 1, "Barton Hall", "was designed by", "John Barton"],
              [2, 1, "John Barton", "was", "an English architect"]],
    "q0008": [[2, 1, "Shark Bay", "is in", "Western Australia"]],
    "q0009": [[1, 1, "Ellery Pond", "is in", "Acadia National Park"],
              [2, 1, "Acadia National Park", "is in", "Maine"]],
    "q0010": [[1, 1, "Foxglove Lane", "is from", "Galway"],
              [2, 1, "Galway", "is in", "Ireland"],
              [1, 1, "Foxglove Lane", "is", "a folk band"]],
}

# ---------------------------------------------------------------------------
# Parses for SF sentences: locus (0-based) -> [(form, pos, head, deprel)].

P = {}

P[(0, 0, 0)] = [  # q0001: Scott Derrickson is an American director, ...
    ("Scott", "PROPN", 2, "compound"), ("Derrickson", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("an", "DET", 6, "det"),
    ("American", "ADJ", 6, "amod"), ("director", "NOUN", 3, "attr"),
    (",", "PUNCT", 6, "punct"), ("screenwriter", "NOUN", 6, "conj"),
    ("and", "CCONJ", 10, "cc"), ("producer", "NOUN", 6, "conj"),
    (".", "PUNCT", 3, "punct"),
]
P[(0, 1, 0)] = [  # q0001: Ed Wood was an American filmmaker.
    ("Ed", "PROPN", 2, "compound"), ("Wood", "PROPN", 3, "nsubj"),
    ("was", "AUX", 0, "root"), ("an", "DET", 6, "det"),
    ("American", "ADJ", 6, "amod"), ("filmmaker", "NOUN", 3, "attr"),
    (".", "PUNCT", 3, "punct"),
]
P[(1, 0, 0)] = [  # q0002: Big Stone Gap is a film directed by Adriana Trigiani.
    ("Big", "PROPN", 3, "compound"), ("Stone", "PROPN", 3, "compound"),
    ("Gap", "PROPN", 4, "nsubj"), ("is", "AUX", 0, "root"),
    ("a", "DET", 6, "det"), ("film", "NOUN", 4, "attr"),
    ("directed", "VERB", 6, "acl"), ("by", "ADP", 7, "agent"),
    ("Adriana", "PROPN", 10, "compound"), ("Trigiani", "PROPN", 8, "pobj"),
    (".", "PUNCT", 4, "punct"),
]
P[(1, 1, 0)] = [  # q0002: Adriana Trigiani is an author based in Greenwich Village, New York City.
    ("Adriana", "PROPN", 2, "compound"), ("Trigiani", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("an", "DET", 5, "det"),
    ("author", "NOUN", 3, "attr"), ("based", "VERB", 5, "acl"),
    ("in", "ADP", 6, "prep"), ("Greenwich", "PROPN", 9, "compound"),
    ("Village", "PROPN", 7, "pobj"), (",", "PUNCT", 9, "punct"),
    ("New", "PROPN", 13, "compound"), ("York", "PROPN", 13, "compound"),
    ("City", "PROPN", 9, "appos"), (".", "PUNCT", 3, "punct"),
]
P[(2, 0, 1)] = [  # q0003: The team played its home games at the Androscoggin Bank Colisee.
    ("The", "DET", 2, "det"), ("team", "NOUN", 3, "nsubj"),
    ("played", "VERB", 0, "root"), ("its", "PRON", 6, "poss"),
    ("home", "NOUN", 6, "compound"), ("games", "NOUN", 3, "obj"),
    ("at", "ADP", 3, "prep"), ("the", "DET", 11, "det"),
    ("Androscoggin", "PROPN", 11, "compound"), ("Bank", "PROPN", 11, "compound"),
    ("Colisee", "PROPN", 7, "pobj"), (".", "PUNCT", 3, "punct"),
]
P[(2, 1, 0)] = [  # q0003: The Androscoggin Bank Colisee is an arena in Lewiston.
    ("The", "DET", 4, "det"), ("Androscoggin", "PROPN", 4, "compound"),
    ("Bank", "PROPN", 4, "compound"), ("Colisee", "PROPN", 5, "nsubj"),
    ("is", "AUX", 0, "root"), ("an", "DET", 7, "det"),
    ("arena", "NOUN", 5, "attr"), ("in", "ADP", 7, "prep"),
    ("Lewiston", "PROPN", 8, "pobj"), (".", "PUNCT", 5, "punct"),
]
P[(3, 0, 0)] = [  # q0004: Return to Olympus is the only album by the American rock band Malfunkshun.
    ("Return", "PROPN", 4, "nsubj"), ("to", "ADP", 1, "prep"),
    ("Olympus", "PROPN", 2, "pobj"), ("is", "AUX", 0, "root"),
    ("the", "DET", 7, "det"), ("only", "ADJ", 7, "amod"),
    ("album", "NOUN", 4, "attr"), ("by", "ADP", 7, "prep"),
    ("the", "DET", 12, "det"), ("American", "ADJ", 12, "amod"),
    ("rock", "NOUN", 12, "compound"), ("band", "NOUN", 8, "pobj"),
    ("Malfunkshun", "PROPN", 12, "appos"), (".", "PUNCT", 4, "punct"),
]
P[(3, 1, 0)] = [  # q0004: Malfunkshun was formed in 1980.
    ("Malfunkshun", "PROPN", 3, "nsubj"), ("was", "AUX", 3, "aux"),
    ("formed", "VERB", 0, "root"), ("in", "ADP", 3, "prep"),
    ("1980", "NUM", 4, "pobj"), (".", "PUNCT", 3, "punct"),
]
P[(3, 1, 1)] = [  # q0004: Andrew Wood was the lead singer of Malfunkshun.
    ("Andrew", "PROPN", 2, "compound"), ("Wood", "PROPN", 3, "nsubj"),
    ("was", "AUX", 0, "root"), ("the", "DET", 6, "det"),
    ("lead", "ADJ", 6, "amod"), ("singer", "NOUN", 3, "attr"),
    ("of", "ADP", 6, "prep"), ("Malfunkshun", "PROPN", 7, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(4, 0, 0)] = [  # q0005: Alder Creek is a stream in Oregon.
    ("Alder", "PROPN", 2, "compound"), ("Creek", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 5, "det"),
    ("stream", "NOUN", 3, "attr"), ("in", "ADP", 5, "prep"),
    ("Oregon", "PROPN", 6, "pobj"), (".", "PUNCT", 3, "punct"),
]
P[(4, 0, 1)] = [  # q0005: Alder Creek flows into Lost Lake.
    ("Alder", "PROPN", 2, "compound"), ("Creek", "PROPN", 3, "nsubj"),
    ("flows", "VERB", 0, "root"), ("into", "ADP", 3, "prep"),
    ("Lost", "PROPN", 6, "compound"), ("Lake", "PROPN", 4, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(4, 1, 0)] = [  # q0005: Lost Lake is a natural lake.
    ("Lost", "PROPN", 2, "compound"), ("Lake", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("natural", "ADJ", 6, "amod"), ("lake", "NOUN", 3, "attr"),
    (".", "PUNCT", 3, "punct"),
]
P[(5, 0, 0)] = [  # q0006: Corvid Press is a publishing house founded by Mary Holt.
    ("Corvid", "PROPN", 2, "compound"), ("Press", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("publishing", "NOUN", 6, "compound"), ("house", "NOUN", 3, "attr"),
    ("founded", "VERB", 6, "acl"), ("by", "ADP", 7, "agent"),
    ("Mary", "PROPN", 10, "compound"), ("Holt", "PROPN", 8, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(5, 1, 0)] = [  # q0006: Mary Holt is a Canadian editor.
    ("Mary", "PROPN", 2, "compound"), ("Holt", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("Canadian", "ADJ", 6, "amod"), ("editor", "NOUN", 3, "attr"),
    (".", "PUNCT", 3, "punct"),
]
P[(6, 0, 0)] = [  # q0007: Barton Hall is a concert venue designed by John Barton.
    ("Barton", "PROPN", 2, "compound"), ("Hall", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("concert", "NOUN", 6, "compound"), ("venue", "NOUN", 3, "attr"),
    ("designed", "VERB", 6, "acl"), ("by", "ADP", 7, "agent"),
    ("John", "PROPN", 10, "compound"), ("Barton", "PROPN", 8, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(6, 1, 0)] = [  # q0007: John Barton was an English architect.
    ("John", "PROPN", 2, "compound"), ("Barton", "PROPN", 3, "nsubj"),
    ("was", "AUX", 0, "root"), ("an", "DET", 6, "det"),
    ("English", "ADJ", 6, "amod"), ("architect", "NOUN", 3, "attr"),
    (".", "PUNCT", 3, "punct"),
]
P[(7, 0, 0)] = [  # q0008: Denham Reef is a coral reef near Shark Bay.
    ("Denham", "PROPN", 2, "compound"), ("Reef", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("coral", "NOUN", 6, "compound"), ("reef", "NOUN", 3, "attr"),
    ("near", "ADP", 6, "prep"), ("Shark", "PROPN", 9, "compound"),
    ("Bay", "PROPN", 7, "pobj"), (".", "PUNCT", 3, "punct"),
]
P[(7, 1, 0)] = [  # q0008: Shark Bay is a bay in Western Australia.
    ("Shark", "PROPN", 2, "compound"), ("Bay", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 5, "det"),
    ("bay", "NOUN", 3, "attr"), ("in", "ADP", 5, "prep"),
    ("Western", "PROPN", 8, "compound"), ("Australia", "PROPN", 6, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(8, 0, 0)] = [  # q0009: Ellery Pond is a pond in Acadia National Park.
    ("Ellery", "PROPN", 2, "compound"), ("Pond", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 5, "det"),
    ("pond", "NOUN", 3, "attr"), ("in", "ADP", 5, "prep"),
    ("Acadia", "PROPN", 9, "compound"), ("National", "PROPN", 9, "compound"),
    ("Park", "PROPN", 6, "pobj"), (".", "PUNCT", 3, "punct"),
]
P[(8, 1, 0)] = [  # q0009: Acadia National Park is a park in Maine.
    ("Acadia", "PROPN", 3, "compound"), ("National", "PROPN", 3, "compound"),
    ("Park", "PROPN", 4, "nsubj"), ("is", "AUX", 0, "root"),
    ("a", "DET", 6, "det"), ("park", "NOUN", 4, "attr"),
    ("in", "ADP", 6, "prep"), ("Maine", "PROPN", 7, "pobj"),
    (".", "PUNCT", 4, "punct"),
]
P[(9, 0, 0)] = [  # q0010: Foxglove Lane is a folk band from Galway.
    ("Foxglove", "PROPN", 2, "compound"), ("Lane", "PROPN", 3, "nsubj"),
    ("is", "AUX", 0, "root"), ("a", "DET", 6, "det"),
    ("folk", "NOUN", 6, "compound"), ("band", "NOUN", 3, "attr"),
    ("from", "ADP", 6, "prep"), ("Galway", "PROPN", 7, "pobj"),
    (".", "PUNCT", 3, "punct"),
]
P[(9, 1, 0)] = [  # q0010: Galway is a city in Ireland.
    ("Galway", "PROPN", 2, "nsubj"), ("is", "AUX", 0, "root"),
    ("a", "DET", 4, "det"), ("city", "NOUN", 2, "attr"),
    ("in", "ADP", 4, "prep"), ("Ireland", "PROPN", 5, "pobj"),
    (".", "PUNCT", 2, "punct"),
]

# ---------------------------------------------------------------------------
# Pipeline fixtures.


def _sub(qid, worker, answer, steps):
    return {"question_id": qid, "worker_id": worker,
            "chosen_answer": answer, "derivation": steps}


def _steps(tag):
    return [[1, 1, f"subject {tag}", "relates to", f"object {tag}"],
            [2, 1, f"object {tag}", "is", "a thing"]]


SUBMISSIONS = (
    # qa: three correct answers -> retained
    [_sub("qa", f"w{i}", "correct-candidate", _steps(f"qa-{i}")) for i in range(3)]
    # qb: two correct + one neither -> only two remain -> dropped
    + [_sub("qb", "w0", "correct-candidate", _steps("qb-0")),
       _sub("qb", "w1", "correct-candidate", _steps("qb-1")),
       _sub("qb", "w2", "neither", _steps("qb-2"))]
    # qc: four correct -> dropped under exact3, sampled under sample3
    + [_sub("qc", f"w{i}", "correct-candidate", _steps(f"qc-{i}")) for i in range(4)]
    # qd: one wrong + three correct -> wrong dropped, three remain -> retained
    + [_sub("qd", "w0", "wrong-candidate", _steps("qd-0"))]
    + [_sub("qd", f"w{i}", "correct-candidate", _steps(f"qd-{i}")) for i in range(1, 4)]
    # qe: retained by the filter, later dropped by a Likely majority
    + [_sub("qe", f"w{i}", "correct-candidate", _steps(f"qe-{i}")) for i in range(3)]
    # qf: retained by the filter, later dropped by a split vote
    + [_sub("qf", f"w{i}", "correct-candidate", _steps(f"qf-{i}")) for i in range(3)]
    # qg: only two submissions -> dropped
    + [_sub("qg", f"w{i}", "correct-candidate", _steps(f"qg-{i}")) for i in range(2)]
)


def _j(qid, worker, label):
    return {"question_id": qid, "worker_id": worker, "label": label}


JUDGEMENTS = (
    [_j("qa", "w0", "Yes"), _j("qa", "w1", "Yes"), _j("qa", "w2", "No"),
     _j("qd", "w0", "Yes"), _j("qd", "w1", "Yes"), _j("qd", "w2", "Yes"),
     _j("qe", "w0", "Likely"), _j("qe", "w1", "Likely"), _j("qe", "w2", "No"),
     _j("qf", "w0", "Yes"), _j("qf", "w1", "Likely"), _j("qf", "w2", "No"),
     _j("qc", "w0", "Yes"), _j("qc", "w1", "Yes"), _j("qc", "w2", "Yes")]
)


def main():
    DATA.mkdir(parents=True, exist_ok=True)

    instances = []
    for qid, question, answer, articles in INSTANCES:
        instances.append({
            "id": qid, "question": question, "answer": answer,
            "articles": [{"title": t, "sentences": s} for t, s, _ in articles],
            "sf_flags": [f for _, _, f in articles],
        })
    (DATA / "instances.json").write_text(
        json.dumps(instances, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")

    (DATA / "references.json").write_text(
        json.dumps(REFERENCES, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    (DATA / "predictions.json").write_text(
        json.dumps({k: [v] for k, v in PREDICTIONS.items()},
                   ensure_ascii=False, indent=2) + "\n", encoding="utf-8")

    lines = []
    for (inst_idx, art_idx, sent_idx), tokens in sorted(P.items()):
        text = INSTANCES[inst_idx][3][art_idx][1][sent_idx]
        lines.append(f"# instance = {INSTANCES[inst_idx][0]}")
        lines.append(f"# text = {text}")
        lines.append(f"# locus = {art_idx},{sent_idx}")
        for i, (form, pos, head, deprel) in enumerate(tokens, start=1):
            lines.append("\t".join([str(i), form, form.lower(), pos, "_", "_",
                                    str(head), deprel, "_", "_"]))
        lines.append("")
    (DATA / "parses.conll").write_text("\n".join(lines) + "\n", encoding="utf-8")

    (DATA / "submissions.json").write_text(
        json.dumps(SUBMISSIONS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    (DATA / "judgements.json").write_text(
        json.dumps(JUDGEMENTS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    print(f"fixtures written under {DATA}")


if __name__ == "__main__":
    main()
