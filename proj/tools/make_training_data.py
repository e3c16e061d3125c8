#!/usr/bin/env python3
# Copyright 2026 The Slotfill Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the bundled training data and gazetteers under data/mini.

Writes train/corpus.jsonl, train/kb_instances.tsv, train/seed.jsonl,
train/dev.jsonl and gazetteers/*.txt. Output is deterministic.
"""

import argparse
import json
import pathlib
import random
import re

FIRST = ["Maria", "John", "Elena", "David", "Sarah", "Lukas", "Hannah", "Peter", "Laura", "Omar",
         "Julia", "Martin", "Clara", "Daniel", "Sofia", "Felix", "Nina", "Erik", "Greta", "Ivan",
         "Lena", "Marco", "Rosa", "Simon", "Tara", "Viktor", "Yara", "Hugo", "Ines", "Karl"]
LAST = ["Lopez", "Carter", "Petrova", "Chen", "Miller", "Weber", "Schmidt", "Novak", "Rossi",
        "Haddad", "Berg", "Fischer", "Vogel", "Price", "Marin", "Braun", "Hart", "Sandberg",
        "Okafor", "Duval", "Moreau", "Janssen", "Costa", "Lindqvist", "Kowalski"]
COMPANIES = ["Norvia Systems", "Baltic Freight", "Helix Labs", "Orbis Bank", "Kestrel Media",
             "Vantor Group", "Pellam Foods", "Stellar Motors", "Quantis Energy", "Ardent Pharma",
             "Corvex Steel", "Lumina Textiles"]
SCHOOLS = ["University of Leeds", "University of Vienna", "University of Bonn", "Stanford University",
           "Harvard University", "Oxford University", "University of Toronto", "University of Milan",
           "Charles University", "University of Madrid"]
CITIES = ["Paris", "Berlin", "Hamburg", "Vienna", "Madrid", "Boston", "Chicago", "Dresden", "Leeds",
          "Toronto", "Osaka", "Milan", "Prague", "Seattle", "Denver", "Atlanta", "Nuremberg", "Geneva"]
STATES = ["Bavaria", "Saxony", "Texas", "Ohio", "Ontario", "Massachusetts", "Georgia"]
COUNTRIES = ["France", "Germany", "Austria", "Spain", "Italy", "Canada", "Japan", "Czech Republic",
             "United States"]
TITLES = ["chief executive", "professor", "director", "chairman", "spokesman", "senator", "engineer",
          "lawyer", "editor", "president", "manager", "chief financial officer", "treasurer"]
CHARGES = ["fraud", "murder", "bribery", "tax evasion", "theft", "money laundering", "embezzlement"]
RELIGIONS = ["Catholic", "Muslim", "Buddhist", "Jewish", "Protestant", "Hindu"]
CAUSES = ["cancer", "heart attack", "pneumonia", "stroke"]
MONTHS = ["January", "February", "March", "April", "May", "June", "July", "August", "September",
          "October", "November", "December"]
FIELDS = ["physics", "law", "medicine", "history", "economics", "chemistry"]
JOBS = ["baker", "teacher", "banker", "nurse", "farmer", "writer"]
INDUSTRY = ["software", "car", "steel", "furniture", "chip", "toy"]

# Names that only occur in the hand-written mini corpus; listed so the
# tagger recognizes them as fillers.
MINI = {
    "PER": ["Anna Keller", "Paul Keller", "Tom Brenner", "Victor Lang"],
    "ORG": ["Lumex Corp", "Lumex", "University of Munich"],
    "GPE": ["Munich", "Lyon"],
}

# (template, polarity). {E} entity, {F} filler; other fields are filled
# from the fact or at random.
TEMPLATES = {
    "per:location_of_birth": {
        "pos": ["{E} was born in {F}.", "{E} was born on {D} in {F}.", "Born in {F}, {E} moved abroad as a child.",
                "{E}, who was born in {F}, studied {field}.", "{E} is a native of {F}.",
                "{E} was born in {F} in {Y}."],
        "neg": ["{E} visited {F} last week.", "{E} gave a speech in {F}.", "{E} arrived in {F} on Monday.",
                "{E} met investors in {F} on Tuesday.", "{E}, a {job} from {F}, visited {C2} last year.",
                "{E}, a former {job}, lived in {F} for years.", "{E} sold a house in {F}.",
                "{E} criticized the mayor of {F}.", "The mayor of {F} met {E} in {C2}."],
        "filler": "GPE",
    },
    "per:date_of_birth": {
        "pos": ["{E} was born on {F}.", "{E} was born on {F} in {C}.", "{E}, born {F}, studied {field}."],
        "neg": ["{E} resigned on {F}.", "{E} arrived in {C} on {F}.", "{E} signed the contract on {F}.",
                "{E} was elected on {F}.", "{E} married {P2} on {F}.", "{E} joined {O} on {F}."],
        "filler": "DATE",
    },
    "per:age": {
        "pos": ["{E}, {F}, said the plan would work.", "{E}, {F}, is the {T} of {O}, the company said.",
                "{E} is {F} years old.", "{E}, aged {F}, lives in {C}.", "{E}, {F}, was charged with {charge}."],
        "neg": ["{E} bought {F} shares of {O}.", "{E} hired {F} workers.", "{E} said {F} people attended.",
                "{E} spent {F} days in {C}.", "{E} wrote {F} books."],
        "filler": "NUMBER",
    },
    "per:title": {
        "pos": ["{E} is the {F} of {O}.", "{F} {E} said the deal was done.", "{E}, the {F} of {O}, said sales rose.",
                "{E}, {N}, is the {F} of {O}, the company said.", "{E} works as a {F} in {C}."],
        "neg": ["{E} met the {F} of {O}.", "{E} criticized the {F}.", "{E} spoke with a {F} from {O}.",
                "{E} sued the {F} of {O}."],
        "filler": "TITLE",
    },
    "per:employee_or_member_of": {
        "pos": ["{E} is the {T} of {F}.", "{E} works for {F}.", "{E} joined {F} in {Y}.",
                "{E}, a {T} at {F}, said sales rose.", "{E}, {N}, is the {T} of {F}, the company said."],
        "neg": ["{E} sued {F}.", "{E} criticized {F}.", "{E} bought shares of {F}.",
                "{E} visited the offices of {F}.", "{F} opened a store near the home of {E}."],
        "filler": "ORG",
    },
    "per:schools_attended": {
        "pos": ["{E} studied {field} at the {F}.", "{E} graduated from the {F} in {Y}.",
                "{E} earned a degree from the {F}.", "{E} studied at the {F}."],
        "neg": ["{E} gave a lecture at the {F}.", "{E} donated money to the {F}.", "{E} visited the {F}.",
                "{E} criticized the {F}."],
        "filler": "ORG",
    },
    "per:spouse": {
        "pos": ["{E} married {F} in {Y}.", "{E} and his wife {F} live in {C}.", "{E} is married to {F}.",
                "{E} and her husband {F} moved to {C}."],
        "neg": ["{E} met {F} in {C}.", "{E} criticized {F}.", "{E} defeated {F} in the election.",
                "{E} hired {F} as an adviser."],
        "filler": "PER",
    },
    "org:location_of_headquarters": {
        "pos": ["{E} is based in {F}.", "The {E} is based in {F}.", "{E}, which is headquartered in {F}, hired staff.",
                "{E} has its headquarters in {F}.", "{E}, a {industry} maker based in {F}, employs {N} people."],
        "neg": ["{E} opened a store in {F}.", "{E} sold products in {F} last year.", "{E} hired workers in {F}.",
                "{E} expanded to {F}.", "{E} closed a factory in {F}."],
        "filler": "GPE",
    },
}

ENTITY = {"org:location_of_headquarters": "ORG"}


def tokenize(text):
  out = []
  for word in text.split():
    trail = []
    while word and word[-1] in ".,;:!?":
      trail.insert(0, word[-1])
      word = word[:-1]
    if word.endswith("'s"):
      out.extend([word[:-2], "'s"])
    elif word:
      out.append(word)
    out.extend(trail)
  return out


def date(rng):
  return f"{rng.choice(MONTHS)} {rng.randint(1, 28)}, {rng.randint(1940, 1995)}"


class World:
  def __init__(self, rng):
    self.rng = rng
    self.people = sorted({f"{f} {l}" for f in FIRST for l in LAST})
    rng.shuffle(self.people)
    self.people = self.people[:120]
    self.facts = {}
    for p in self.people:
      self.facts[p] = {
          "per:location_of_birth": rng.choice(CITIES),
          "per:date_of_birth": date(rng),
          "per:age": str(rng.randint(25, 80)),
          "per:title": rng.choice(TITLES),
          "per:employee_or_member_of": rng.choice(COMPANIES),
          "per:schools_attended": rng.choice(SCHOOLS),
      }
    for a, b in zip(self.people[0::2], self.people[1::2]):
      self.facts[a]["per:spouse"] = b
      self.facts[b]["per:spouse"] = a
    self.orgs = {o: {"org:location_of_headquarters": rng.choice(CITIES)} for o in COMPANIES + SCHOOLS}

  def random_value(self, slot):
    r = self.rng
    return {
        "per:location_of_birth": lambda: r.choice(CITIES),
        "per:date_of_birth": lambda: date(r),
        "per:age": lambda: str(r.randint(2, 400)),
        "per:title": lambda: r.choice(TITLES),
        "per:employee_or_member_of": lambda: r.choice(COMPANIES),
        "per:schools_attended": lambda: r.choice(SCHOOLS),
        "per:spouse": lambda: r.choice(self.people),
        "org:location_of_headquarters": lambda: r.choice(CITIES),
    }[slot]()

  def fields(self, entity, filler):
    r = self.rng
    others = [p for p in self.people if p not in (entity, filler)]
    return {
        "E": entity, "F": filler, "D": date(r), "Y": str(r.randint(1980, 2014)), "C": r.choice(CITIES),
        "C2": r.choice(CITIES), "T": r.choice(TITLES), "O": r.choice(COMPANIES), "N": str(r.randint(25, 80)),
        "P2": r.choice(others), "field": r.choice(FIELDS), "job": r.choice(JOBS),
        "industry": r.choice(INDUSTRY), "charge": r.choice(CHARGES),
    }


def render(world, slot, polarity, entity, filler, index=None):
  options = TEMPLATES[slot][polarity]
  template = world.rng.choice(options) if index is None else options[index % len(options)]
  text = template.format(**world.fields(entity, filler))
  return text[0].upper() + text[1:]


def context(text, entity, filler):
  tokens = tokenize(text)
  def find(surface, avoid=None):
    needle = tokenize(surface)
    for i in range(len(tokens) - len(needle) + 1):
      if [t.lower() for t in tokens[i:i + len(needle)]] == [n.lower() for n in needle]:
        span = (i, i + len(needle))
        if avoid is None or span[1] <= avoid[0] or avoid[1] <= span[0]:
          return span
    raise ValueError(f"{surface!r} not in {text!r}")
  e = find(entity)
  f = find(filler, e)
  first, second = (e, f) if e[0] < f[0] else (f, e)
  return {"left": tokens[:first[0]], "middle": tokens[first[1]:second[0]], "right": tokens[second[1]:],
          "entity_first": e[0] < f[0]}


def entity_for(world, slot):
  if ENTITY.get(slot) == "ORG":
    return world.rng.choice(sorted(world.orgs))
  return world.rng.choice(world.people)


def fact(world, slot, entity):
  table = world.orgs if ENTITY.get(slot) == "ORG" else world.facts
  return table[entity].get(slot)


def labeled(world, slot, n, origin):
  out = []
  for i in range(n):
    polarity = "pos" if i % 2 == 0 else "neg"
    entity = entity_for(world, slot)
    filler = world.random_value(slot)
    while filler == entity:
      filler = world.random_value(slot)
    text = render(world, slot, polarity, entity, filler, i // 2)
    c = context(text, entity, filler)
    c.update({"label": 1 if polarity == "pos" else 0, "slot": slot, "origin": origin})
    out.append(c)
  return out


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "mini"))
  parser.add_argument("--seed", type=int, default=2015)
  parser.add_argument("--docs", type=int, default=220)
  args = parser.parse_args()
  rng = random.Random(args.seed)
  world = World(rng)
  out = pathlib.Path(args.out)
  (out / "train").mkdir(parents=True, exist_ok=True)
  (out / "gazetteers").mkdir(parents=True, exist_ok=True)

  slots = sorted(TEMPLATES)
  with open(out / "train" / "corpus.jsonl", "w") as f:
    for d in range(args.docs):
      sentences = []
      for _ in range(rng.randint(3, 6)):
        slot = rng.choice(slots)
        entity = entity_for(world, slot)
        truth = fact(world, slot, entity)
        roll = rng.random()
        if truth is not None and roll < 0.55:
          sentences.append(render(world, slot, "pos", entity, truth))
        elif truth is not None and roll < 0.7:
          sentences.append(render(world, slot, "neg", entity, truth))
        else:
          value = world.random_value(slot)
          while value in (truth, entity):
            value = world.random_value(slot)
          sentences.append(render(world, slot, "neg", entity, value))
      f.write(json.dumps({"id": f"TRAIN_{d:04d}", "genre": "news", "text": " ".join(sentences)}) + "\n")

  with open(out / "train" / "kb_instances.tsv", "w") as f:
    for p in world.people:
      for slot, value in sorted(world.facts[p].items()):
        f.write(f"{p}\t{slot}\t{value}\n")
    for o in sorted(world.orgs):
      for slot, value in sorted(world.orgs[o].items()):
        f.write(f"{o}\t{slot}\t{value}\n")

  for name, n, origin in (("seed.jsonl", 24, "seed"), ("dev.jsonl", 40, "distant")):
    with open(out / "train" / name, "w") as f:
      for slot in slots:
        for example in labeled(world, slot, n, origin):
          f.write(json.dumps(example) + "\n")

  lists = {
      "PER": world.people + MINI["PER"],
      "ORG": COMPANIES + SCHOOLS + MINI["ORG"],
      "GPE": CITIES + STATES + COUNTRIES + MINI["GPE"],
      "TITLE": TITLES,
      "CHARGE": CHARGES,
      "RELIGION": RELIGIONS,
      "CAUSE_OF_DEATH": CAUSES,
  }
  for kind, names in lists.items():
    (out / "gazetteers" / f"{kind}.txt").write_text("".join(f"{n}\n" for n in sorted(set(names))))


if __name__ == "__main__":
  main()
