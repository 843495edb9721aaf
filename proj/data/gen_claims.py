#!/usr/bin/env python3
"""Regenerates audit_claims.json (run from data/)."""

import json

SPACES = {
    "example-1": {
        "points": ["k", "l", "m"],
        "opens": [[], ["k"], ["l"], ["k", "l"], ["k", "l", "m"]],
    },
    "meekly-negative": {
        "points": ["k", "l", "m", "n"],
        "opens": [[], ["l"], ["m"], ["l", "m"], ["m", "n"], ["k", "l", "m"],
                  ["l", "m", "n"], ["k", "l", "m", "n"]],
    },
    "meekly-positive": {
        "points": ["k", "l", "m"],
        "opens": [[], ["k"], ["l", "m"], ["k", "l", "m"]],
    },
    "finite-discrete": {
        "points": ["k", "l", "m"],
        "opens": [[], ["k"], ["l"], ["m"], ["k", "l"], ["k", "m"], ["l", "m"],
                  ["k", "l", "m"]],
    },
    "finite-trivial": {
        "points": ["k", "l", "m"],
        "opens": [[], ["k", "l", "m"]],
    },
}

SUBSETS3 = [[], ["k"], ["l"], ["m"], ["k", "l"], ["k", "m"], ["l", "m"],
            ["k", "l", "m"]]


def show(subset):
    return "{" + ",".join(subset) + "}" if subset else "∅"


claims = []


def claim(target, location, paper_value, citation, probe):
    claims.append({
        "target": target,
        "location": location,
        "paper_value": paper_value,
        "citation": citation,
        "probe": probe,
    })


# --- section-3-1: the 8x7 classification table ------------------------------
TABLE_COLS = ["closed", "semi-closed", "pre-closed", "g-closed",
              "sc-star-closed", "g-sc-star-closed", "sc-star-g-closed"]
ALL_TRUE = {c: True for c in TABLE_COLS}
ONLY_SEMI = {c: (c == "semi-closed") for c in TABLE_COLS}
ALL_FALSE = {c: False for c in TABLE_COLS}
TABLE_ROWS = {
    "∅": ALL_TRUE, "{k}": ONLY_SEMI, "{l}": ONLY_SEMI, "{m}": ALL_TRUE,
    "{k,l}": ALL_FALSE, "{k,m}": ALL_TRUE, "{l,m}": ALL_TRUE, "{k,l,m}": ALL_TRUE,
}
for subset in SUBSETS3:
    row = TABLE_ROWS[show(subset)]
    for col in TABLE_COLS:
        claim("section-3-1", f"row {show(subset)} / col {col}", row[col],
              "§3.1 Relationship Table of Closed Sets",
              {"kind": "class-member", "space": "example-1", "subset": subset,
               "class": col})

# --- example-1-families ------------------------------------------------------
LISTED_C = [[], ["m"], ["k", "m"], ["l", "m"], ["k", "l", "m"]]
LISTED_O = [[], ["k"], ["l"], ["k", "l"], ["k", "m"], ["l", "m"], ["k", "l", "m"]]


def member(listing, subset):
    return sorted(subset) in [sorted(x) for x in listing]


for cls, fam, cite in [
    ("sc-star-closed", LISTED_C, "§3 Example 1, C_{SC*}(X) = {∅, {m}, {k,m}, {l,m}, X}"),
    ("g-sc-star-closed", LISTED_C, "§3 Example 1, C_{gSC*}(X) = {∅, {m}, {k,m}, {l,m}, X}"),
    ("sc-star-g-closed", LISTED_C, "§3 Example 1, C_{SC*g}(X) = {∅, {m}, {k,m}, {l,m}, X}"),
    ("sc-star-open", LISTED_O, "§3 Example 1, O_{SC*}(X) = {∅, {k}, {l}, {k,l}, {k,m}, {l,m}, X}"),
]:
    for subset in SUBSETS3:
        claim("example-1-families",
              f"listed {cls} family at {show(subset)}", member(fam, subset), cite,
              {"kind": "class-member", "space": "example-1", "subset": subset,
               "class": cls})

for subset in SUBSETS3:
    claim("example-1-families",
          f"listed O_SC* vs complement of listed C_SC* at {show(subset)}",
          member(LISTED_O, subset),
          "§3 complement rule (SC*-open = complement of SC*-closed) applied to "
          "Example 1's listed families",
          {"kind": "listed-complement-member", "space": "example-1",
           "subset": subset, "family": LISTED_C})

for cls in ["sc-star-closed", "sc-star-open"]:
    claim("example-1-families",
          f"claimed non-membership of {{m}} in {cls}", False,
          "§3 Example 1, \"The subset {m} is neither SC*-open nor SC*-closed\"",
          {"kind": "class-member", "space": "example-1", "subset": ["m"],
           "class": cls})

# --- section-6-4: finite rows of the topology/axiom table -------------------
AXIOM_COLS = ["normal", "sc-star-normal", "meekly-sc-star-normal",
              "softly-regular", "almost-regular"]
ROWS_64 = {
    "finite-discrete": ("row Finite (Discrete)", {c: True for c in AXIOM_COLS}),
    "finite-trivial": ("row Finite (Trivial)",
                       {"normal": False, "sc-star-normal": False,
                        "meekly-sc-star-normal": True, "softly-regular": True,
                        "almost-regular": True}),
}
for space, (rowname, values) in ROWS_64.items():
    for axiom in AXIOM_COLS:
        cite = f"§6.4 Relationship Table in Different Topologies, {rowname}"
        if axiom == "meekly-sc-star-normal":
            for operands in ["both-closed", "relaxed"]:
                claim("section-6-4", f"{rowname} / col {axiom} (operands={operands})",
                      values[axiom], cite,
                      {"kind": "axiom-holds", "space": space, "axiom": axiom,
                       "disjointness": "open", "operands": operands})
        else:
            claim("section-6-4", f"{rowname} / col {axiom}", values[axiom], cite,
                  {"kind": "axiom-holds", "space": space, "axiom": axiom})

# --- meekly-examples ----------------------------------------------------------
NEG_CITE = "§5 Example, X = {k,l,m,n}, \"is not meekly SC*-normal\""
for operands in ["both-closed", "relaxed"]:
    claim("meekly-examples",
          f"negative example: space is meekly-sc-star-normal (operands={operands})",
          False, NEG_CITE,
          {"kind": "axiom-holds", "space": "meekly-negative",
           "axiom": "meekly-sc-star-normal", "disjointness": "open",
           "operands": operands})
claim("meekly-examples", "negative example: A={k,l} is sc-star-closed", True, NEG_CITE,
      {"kind": "class-member", "space": "meekly-negative", "subset": ["k", "l"],
       "class": "sc-star-closed"})
claim("meekly-examples", "negative example: B={n} is closed", True, NEG_CITE,
      {"kind": "class-member", "space": "meekly-negative", "subset": ["n"],
       "class": "closed"})
claim("meekly-examples",
      "negative example: pair (A={k,l}, B={n}) admits a disjoint dense separation",
      False, NEG_CITE + ", \"there do not exist open sets U, V\"",
      {"kind": "meekly-pair-separable", "space": "meekly-negative",
       "a": ["k", "l"], "b": ["n"], "disjointness": "open"})

POS_CITE = "§5 second Example, X = {k,l,m}, \"satisfies the definition of a meekly SC*-normal space\""
for operands in ["both-closed", "relaxed"]:
    claim("meekly-examples",
          f"positive example: space is meekly-sc-star-normal (operands={operands})",
          True, POS_CITE,
          {"kind": "axiom-holds", "space": "meekly-positive",
           "axiom": "meekly-sc-star-normal", "disjointness": "open",
           "operands": operands})
claim("meekly-examples", "positive example: A={k} is sc-star-closed", True, POS_CITE,
      {"kind": "class-member", "space": "meekly-positive", "subset": ["k"],
       "class": "sc-star-closed"})
claim("meekly-examples", "positive example: B={l} is closed", True, POS_CITE,
      {"kind": "class-member", "space": "meekly-positive", "subset": ["l"],
       "class": "closed"})
claim("meekly-examples", "positive example: cl(U∩A)=A for U={k}, A={k}", True,
      POS_CITE, {"kind": "density-equals", "space": "meekly-positive",
                 "open": ["k"], "set": ["k"]})
claim("meekly-examples", "positive example: cl(V∩B)=B for V={l,m}, B={l}", True,
      POS_CITE + ", displayed computation cl({l}) = {l}",
      {"kind": "density-equals", "space": "meekly-positive", "open": ["l", "m"],
       "set": ["l"]})
claim("meekly-examples", "positive example: U∩V=∅ for U={k}, V={l,m}", True,
      POS_CITE, {"kind": "sets-disjoint", "space": "meekly-positive",
                 "u": ["k"], "v": ["l", "m"]})

doc = {"spaces": SPACES, "claims": claims}
with open("audit_claims.json", "w", encoding="utf-8") as fh:
    json.dump(doc, fh, ensure_ascii=False, indent=2)
    fh.write("\n")
print(f"{len(claims)} claims")
