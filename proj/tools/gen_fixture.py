#!/usr/bin/env python3
"""Builds data/sample_corpus.jsonl and data/seeds.tsv.

The corpus is synthetic. Author rosters are composed year by year so that
every seed's cumulative (papers, vertices, edges) series and the aggregate
union series across all seeds land exactly on the growth tables frozen in
tests/reference_series.hpp. The script verifies all of that by recomputing
the series from the emitted records before writing anything.
"""

import json
import os
import random
import sys

OUT_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "data")

YEAR_LO, YEAR_HI = 1990, 2015
YEARS = range(YEAR_LO, YEAR_HI + 1)

# Aggregate cumulative targets: year -> (seeds, papers, vertices, edges).
AGGREGATE = {
    1990: (1, 1, 2, 1),
    1991: (1, 1, 2, 1),
    1992: (1, 1, 2, 1),
    1993: (1, 1, 2, 1),
    1994: (1, 1, 2, 1),
    1995: (2, 2, 4, 2),
    1996: (2, 3, 6, 5),
    1997: (3, 4, 9, 8),
    1998: (3, 5, 9, 8),
    1999: (4, 8, 12, 11),
    2000: (5, 12, 18, 25),
    2001: (8, 15, 27, 37),
    2002: (9, 20, 33, 48),
    2003: (11, 29, 53, 109),
    2004: (12, 35, 59, 123),
    2005: (19, 50, 86, 221),
    2006: (20, 63, 99, 245),
    2007: (23, 84, 123, 310),
    2008: (25, 107, 139, 353),
    2009: (28, 171, 204, 606),
    2010: (30, 223, 251, 734),
    2011: (35, 346, 381, 1107),
    2012: (37, 396, 425, 1249),
    2013: (37, 446, 489, 1440),
    2014: (37, 509, 536, 1588),
    2015: (37, 554, 582, 1714),
}

# Featured seed cumulative targets: year -> (papers, vertices, edges).
FEATURED_A = {  # first paper 2001, four authors
    2001: (1, 4, 6),
    2002: (2, 4, 6),
    2003: (2, 4, 6),
    2004: (2, 4, 6),
    2005: (3, 6, 9),
    2006: (3, 6, 9),
    2007: (4, 7, 11),
    2008: (22, 15, 30),
    2009: (37, 40, 189),
    2010: (42, 53, 219),
    2011: (50, 60, 265),
    2012: (59, 68, 295),
    2013: (60, 68, 295),
    2014: (64, 72, 302),
    2015: (69, 80, 329),
}

FEATURED_S = {  # first paper 1995, two authors
    1995: (1, 2, 1),
    1996: (1, 2, 1),
    1997: (1, 2, 1),
    1998: (2, 2, 1),
    1999: (3, 2, 1),
    2000: (4, 3, 2),
    2001: (4, 3, 2),
    2002: (5, 5, 5),
    2003: (6, 12, 33),
    2004: (8, 13, 37),
    2005: (14, 19, 51),
    2006: (15, 20, 52),
    2007: (17, 23, 56),
    2008: (18, 24, 57),
    2009: (23, 42, 198),
    2010: (32, 57, 238),
    2011: (41, 73, 275),
    2012: (47, 76, 281),
    2013: (47, 76, 281),
    2014: (48, 80, 304),
    2015: (53, 86, 313),
}

# One 2009 paper is shared by both featured seeds; it carries this many
# brand-new co-authors. Their networks overlap only through that paper.
SHARED_NEW_ACTORS = 12

# 37 seeds, alphabetical. Index -> (name, category, role); roles: 'A'/'S'
# featured, 'big' (>= 15 papers), 'small' (<= 13), 'mid' (exactly 14).
SEEDS = [
    ("Adibah Mohamad Zain", "ap", "big"),
    ("Ahmad Tajuddin Zakaria", "ap", "big"),
    ("Aini Roslan", "ap", "small"),
    ("Amir Faisal Mydin", "pr", "small"),
    ("Arifah Abdul Basir", "pr", "A"),
    ("Azman Che Hashim", "ap", "big"),
    ("Badrul Hisyam Sulong", "ap", "small"),
    ("Chan Boon Keat", "ap", "small"),
    ("Chew Lee Fung", "pr", "big"),
    ("Dayang Suraya Mansor", "pr", "big"),
    ("Emilia Kassim", "ap", "small"),
    ("Farid Wajdi Othman", "ap", "small"),
    ("Goh Siew Ling", "ap", "big"),
    ("Hafizah Md Sani", "pr", "big"),
    ("Halimah Bujang", "pr", "small"),
    ("Idris Mat Jani", "ap", "small"),
    ("Intan Salwani Mokhtar", "ap", "big"),
    ("Jamaliah Taib", "ap", "big"),
    ("Kamarul Azhar Senik", "pr", "small"),
    ("Khadijah Ujang", "pr", "small"),
    ("Lee Chin Hock", "ap", "big"),
    ("Lim Poh Suan", "ap", "big"),
    ("Mazlan Daud", "ap", "small"),
    ("Mohd Fadzil Ramlan", "pr", "small"),
    ("Ng Wai Peng", "ap", "big"),
    ("Noraini Che Wan", "ap", "big"),
    ("Nurul Akmal Sapian", "ap", "small"),
    ("Ong Teik Hwa", "pr", "small"),
    ("Rahimah Derus", "ap", "mid"),
    ("Roslina Hamzah", "ap", "big"),
    ("Salmiah Mat Yusof", "pr", "small"),
    ("Shamsul Kamal Wahab", "ap", "small"),
    ("Syed Aiman Mohd Nasir", "ap", "S"),
    ("Tan Mei Yee", "pr", "small"),
    ("Teoh Kim Seng", "ap", "big"),
    ("Wan Azlan Senawi", "ap", "small"),
    ("Zuraidah Alias", "pr", "big"),
]

# Activation year per seed index (featured included).
ACTIVATION = {
    0: 1990, 1: 1997, 2: 2005, 3: 2005, 4: 2001, 5: 1999, 6: 2005,
    7: 2007, 8: 2000, 9: 2001, 10: 2007, 11: 2008, 12: 2001, 13: 2002,
    14: 2009, 15: 2009, 16: 2003, 17: 2003, 18: 2009, 19: 2010, 20: 2004,
    21: 2005, 22: 2010, 23: 2011, 24: 2005, 25: 2005, 26: 2011, 27: 2011,
    28: 2005, 29: 2006, 30: 2011, 31: 2011, 32: 1995, 33: 2012, 34: 2007,
    35: 2012, 36: 2008,
}

# Paper-count targets for 'small' and 'mid' seeds (bigs emerge from the
# structural plan and must end >= 15).
SMALL_TARGETS = {
    2: 13, 3: 11, 6: 9, 7: 10, 10: 8, 11: 9, 14: 12, 15: 7, 18: 5,
    19: 8, 22: 6, 23: 7, 26: 6, 27: 5, 30: 4, 31: 3, 33: 5, 35: 4,
    28: 14,
}

FIRST_POOL = [
    "Bakri", "Cempaka", "Darwis", "Elyas", "Fauziah", "Ghani", "Hasnah",
    "Iskandar", "Jumaat", "Kalsom", "Latifah", "Mukhriz", "Normah",
    "Osman", "Puteri", "Qistina", "Ramlah", "Sofiah", "Tajul", "Umairah",
    "Viknesh", "Yusri", "Zabidi", "Aruna", "Bhavani", "Chandran",
    "Devaraj", "Ezlin", "Firdaus", "Ganesan", "Hidayah", "Indran",
    "Jefri", "Kartini", "Logan", "Maznah", "Nadzmi", "Omar", "Prema",
    "Rashidah", "Saufi", "Thilaga", "Umar", "Vimala", "Yasmin", "Zubir",
]

LAST_POOL = [
    "Ariffin", "Bahadur", "Chandra", "Dollah", "Embong", "Fadzir",
    "Gopal", "Harun", "Idrus", "Jalil", "Kadir", "Lokman", "Mustafa",
    "Nordin", "Pillay", "Qadir", "Rosli", "Subramaniam", "Talib",
    "Uda", "Veloo", "Yaakob", "Zamzuri", "Awang", "Bohari", "Chik",
    "Dahlan", "Esa", "Fikri", "Ghazali", "Hashim", "Ismail", "Jusoh",
    "Karim", "Latip", "Mokhzani", "Nayan", "Puasa", "Rahmat", "Saleh",
    "Tahir", "Ujang", "Zolkepli", "Basri", "Danial", "Effendi",
]

TITLE_WORDS_A = [
    "Adaptive", "Incremental", "Scalable", "Robust", "Distributed",
    "Hierarchical", "Probabilistic", "Hybrid", "Efficient", "Parallel",
    "Semantic", "Temporal", "Spectral", "Streaming", "Weighted",
]

TITLE_WORDS_B = [
    "clustering", "indexing", "classification", "retrieval", "matching",
    "segmentation", "summarisation", "extraction", "prediction",
    "optimisation", "annotation", "ranking", "filtering", "alignment",
    "compression",
]

TITLE_WORDS_C = [
    "for sensor streams", "of web repositories", "in digital libraries",
    "over sparse graphs", "for query logs", "of citation archives",
    "in multimedia collections", "for federated catalogues",
    "over time series", "of noisy documents", "in peer networks",
    "for heterogeneous data", "over encrypted stores", "of event traces",
    "in large ontologies",
]

# Decoy papers never involve a seed; the first five scatter a featured
# seed's name tokens so the bag query matches where the phrase query
# cannot.
DECOYS = [
    (1994, ["Heikki Verkasalo", "Paulus Kettunen"]),
    (2003, ["Abdul Basir Weiss", "Arifah Donner"]),
    (2006, ["Basir Holmgren", "Arifah Steiner", "Abdul Novak"]),
    (2010, ["Arifah Lindqvist", "Abdul Basir Keller"]),
    (2013, ["Syed Aiman Brandt", "Mohd Nasir Egger"]),
    (2014, ["Mohd Gruber", "Syed Aiman Falk", "Nasir Brenner"]),
    (1998, ["Giulia Ferretti", "Tomasz Wierzba"]),
]


def pairs(seq):
    seq = sorted(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            yield (seq[i], seq[j])


def norm(name):
    return " ".join(name.lower().split())


class Net:
    """One seed's co-authorship network, grown paper by paper."""

    def __init__(self, seed):
        self.seed = seed
        self.vertices = set()
        self.edges = set()
        self.papers = 0
        self.anchor = None

    def has_edge(self, a, b):
        return (min(a, b), max(a, b)) in self.edges

    def new_counts(self, authors):
        new_v = sum(1 for a in authors if a not in self.vertices)
        new_e = sum(
            1 for p in pairs(authors) if p not in self.edges
        )
        return new_v, new_e

    def apply(self, authors):
        self.vertices.update(authors)
        self.edges.update(pairs(authors))
        self.papers += 1
        for a in authors:
            if a != self.seed and self.anchor is None:
                self.anchor = a

    def missing_pairs(self):
        olds = [v for v in self.vertices if v != self.seed]
        return sum(1 for p in pairs(olds) if p not in self.edges)


def find_subset(net, t_new, target, exclude=frozenset(), rng_seed=0):
    """Old-vertex subset U with t_new * |U| + (missing pairs inside U) ==
    target. Returns None when no subset is found within budget."""
    if target == 0:
        return []
    olds = [
        v
        for v in sorted(net.vertices)
        if v != net.seed and v not in exclude
    ]

    def gains(chosen, candidates):
        out = []
        for u in candidates:
            g = t_new + sum(1 for w in chosen if not net.has_edge(u, w))
            out.append((g, u))
        return out

    def dfs(order_desc, budget, shuffled=None):
        stack_u = []
        best = []

        def rec(remaining, candidates):
            nonlocal budget
            if budget <= 0:
                return False
            budget -= 1
            if remaining == 0:
                best.extend(stack_u)
                return True
            scored = [
                (g, u) for g, u in gains(stack_u, candidates) if g <= remaining
            ]
            if shuffled is not None:
                shuffled.shuffle(scored)
            else:
                scored.sort(key=lambda x: (-x[0], x[1]) if order_desc else x)
            for g, u in scored[:16]:
                stack_u.append(u)
                rest = [c for c in candidates if c != u]
                if rec(remaining - g, rest):
                    return True
                stack_u.pop()
            return False

        if rec(target, olds):
            return best
        return None

    result = dfs(True, 60000)
    if result is None:
        result = dfs(False, 60000)
    i = 0
    while result is None and i < 8:
        rng = random.Random((rng_seed, t_new, target, i))
        result = dfs(True, 30000, shuffled=rng)
        i += 1
    return result


class Generator:
    def __init__(self):
        self.records = []  # (year, seq, [author names])
        self.seq = 0
        self.union_vertices = set()
        self.union_edges = set()
        self.union_papers = 0
        self.nets = {}
        self.coauthor_counter = 0
        self.seed_names = [name for name, _, _ in SEEDS]
        self.seed_tokens = {
            t for name in self.seed_names for t in norm(name).split()
        }
        for name in self.seed_names:
            self.nets[name] = Net(name)

    def fresh_name(self):
        while True:
            k = self.coauthor_counter
            self.coauthor_counter += 1
            first = FIRST_POOL[k % len(FIRST_POOL)]
            last = LAST_POOL[(k // len(FIRST_POOL)) % len(LAST_POOL)]
            serial = k // (len(FIRST_POOL) * len(LAST_POOL))
            name = f"{first} {last}" if serial == 0 else f"{first} {last} {serial + 1}"
            if not set(norm(name).split()) & self.seed_tokens:
                return name

    def emit(self, year, authors, seeds_involved):
        assert len(authors) == len(set(authors)), authors
        self.records.append((year, self.seq, list(authors)))
        self.seq += 1
        for seed in seeds_involved:
            self.nets[seed].apply(authors)
        self.union_papers += 1
        self.union_vertices.update(authors)
        self.union_edges.update(pairs(authors))

    # -- per-seed exact-growth realiser ---------------------------------

    def compose(self, net, t_new, extra, exclude=frozenset()):
        new_names = [self.fresh_name() for _ in range(t_new)]
        subset = find_subset(net, t_new, extra, exclude, rng_seed=net.papers)
        if subset is None:
            return None
        return [net.seed] + new_names + subset

    def snapshot(self):
        return (
            len(self.records),
            self.seq,
            self.coauthor_counter,
            set(self.union_vertices),
            set(self.union_edges),
            self.union_papers,
            {
                name: (set(n.vertices), set(n.edges), n.papers, n.anchor)
                for name, n in self.nets.items()
            },
        )

    def restore(self, snap):
        n_rec, seq, counter, uv, ue, up, nets = snap
        del self.records[n_rec:]
        self.seq = seq
        self.coauthor_counter = counter
        self.union_vertices = set(uv)
        self.union_edges = set(ue)
        self.union_papers = up
        for name, (vs, es, papers, anchor) in nets.items():
            net = self.nets[name]
            net.vertices = set(vs)
            net.edges = set(es)
            net.papers = papers
            net.anchor = anchor

    def host_bound(self, net, t):
        olds = max(0, len(net.vertices) - 1)
        return t * olds + net.missing_pairs()

    def run_jobs(self, year, jobs, extra, pick_host, exclude=frozenset()):
        """jobs: list of new-vertex counts t, one paper each. Attaches
        `extra` edges across them exactly, greedily front-loading whatever
        each paper's host can absorb. Returns False when the exact landing
        fails, leaving state untouched via the caller's snapshot."""
        remaining = extra
        for idx, t in enumerate(jobs):
            last = idx == len(jobs) - 1
            seed = pick_host(t, remaining, last)
            net = self.nets[seed]
            if remaining == 0:
                chunk = 0
            elif last:
                chunk = remaining
            else:
                chunk = min(remaining, self.host_bound(net, t))
            authors = None
            c = chunk
            floor = remaining if last else 0
            while authors is None and c >= floor:
                authors = self.compose(net, t, c, exclude)
                if authors is None:
                    c -= 1
            if authors is None:
                return False
            got_v, got_e = net.new_counts(authors)
            assert got_v == t and got_e == t + t * (t - 1) // 2 + c, (
                year, seed, authors, got_v, got_e, t, c)
            remaining -= c
            self.emit(year, authors, [seed])
        return remaining == 0

    @staticmethod
    def partitions(dv, dp):
        """Candidate ways to spread dv new vertices over at most dp papers."""
        outs = []
        if dv == 0:
            outs.append([])
        elif dv <= dp:
            outs.append([1] * dv)
            if dv >= 2 and dp > dv:
                outs.append([2] + [1] * (dv - 2))
        else:
            outs.append([dv // dp + (1 if i < dv % dp else 0)
                         for i in range(dp)])
            if dp > 1:
                outs.append([dv - dp + 1] + [1] * (dp - 1))
        return outs

    def realize(self, seed, year, dp, dv, de, exclude=frozenset()):
        """Adds exactly dp papers, dv new vertices and de new edges to one
        seed's network."""
        net = self.nets[seed]
        assert dp >= 0 and dv >= 0 and de >= 0
        if dp == 0:
            assert dv == 0 and de == 0, (seed, year, dp, dv, de)
            return
        if net.papers == 0:
            # Activation year: the first paper is a single clique that must
            # consume the whole quota (holds for both featured seeds).
            assert dp == 1 and de == dv * (dv - 1) // 2, (seed, year, dp, dv, de)
            authors = [seed] + [self.fresh_name() for _ in range(dv - 1)]
            self.emit(year, authors, [seed])
            return

        for parts in self.partitions(dv, dp):
            spare = dp - len(parts)
            base = sum(t + t * (t - 1) // 2 for t in parts)
            extra = de - base
            if extra < 0:
                continue
            for jobs in (parts + [0] * spare, [0] * spare + parts):
                snap = self.snapshot()
                if self.run_jobs(year, jobs, extra,
                                 lambda t, r, l: seed, exclude):
                    return
                self.restore(snap)
        raise AssertionError(("realize failed", seed, year, dp, dv, de))

    # -- whole-corpus plan ----------------------------------------------

    def featured_deltas(self, table, year, prev):
        if year not in table:
            return None
        p, v, e = table[year]
        pp, pv, pe = prev
        return (p - pp, v - pv, e - pe), (p, v, e)

    def build(self):
        idx_a = self.seed_names.index("Arifah Abdul Basir")
        idx_s = self.seed_names.index("Syed Aiman Mohd Nasir")
        seed_a = self.seed_names[idx_a]
        seed_s = self.seed_names[idx_s]
        bigs = [
            name for (name, _, role), i in zip(SEEDS, range(37))
            if role == "big"
        ]
        smalls = {
            self.seed_names[i]: t for i, t in SMALL_TARGETS.items()
        }

        prev_a = (0, 0, 0)
        prev_s = (0, 0, 0)
        prev_union = (0, 0, 0, 0)

        for year in YEARS:
            target = AGGREGATE[year]
            union_before = (
                len({n for n in self.seed_names if self.nets[n].papers}),
                self.union_papers,
                len(self.union_vertices),
                len(self.union_edges),
            )
            assert union_before == prev_union, (year, union_before, prev_union)

            # Featured seeds first; their curves are fixed.
            da = self.featured_deltas(FEATURED_A, year, prev_a)
            ds = self.featured_deltas(FEATURED_S, year, prev_s)
            if year == 2009:
                shared = [seed_a, seed_s] + [
                    self.fresh_name() for _ in range(SHARED_NEW_ACTORS)
                ]
                na, ns = self.nets[seed_a], self.nets[seed_s]
                va, ea = na.new_counts(shared)
                vs, es = ns.new_counts(shared)
                self.emit(year, shared, [seed_a, seed_s])
                (dpa, dva, dea), prev_a = da
                (dps, dvs, des), prev_s = ds
                self.realize(seed_a, year, dpa - 1, dva - va, dea - ea,
                             exclude=frozenset([seed_s]))
                self.realize(seed_s, year, dps - 1, dvs - vs, des - es,
                             exclude=frozenset([seed_a]))
            else:
                if ds is not None:
                    (dps, dvs, des), prev_s = ds
                    self.realize(seed_s, year, dps, dvs, des,
                                 exclude=frozenset([seed_a]))
                if da is not None:
                    (dpa, dva, dea), prev_a = da
                    self.realize(seed_a, year, dpa, dva, dea,
                                 exclude=frozenset([seed_s]))

            # Residual for the filler seeds.
            s_now = len({n for n in self.seed_names if self.nets[n].papers})
            res_s = target[0] - s_now
            res_p = target[1] - self.union_papers
            res_v = target[2] - len(self.union_vertices)
            res_e = target[3] - len(self.union_edges)
            self.plan_fillers(year, res_s, res_p, res_v, res_e, bigs, smalls)

            got = (
                len({n for n in self.seed_names if self.nets[n].papers}),
                self.union_papers,
                len(self.union_vertices),
                len(self.union_edges),
            )
            assert got == target, (year, got, target)
            prev_union = target

    def plan_fillers(self, year, n_seeds, P, V, E, bigs, smalls):
        assert n_seeds >= 0 and P >= 0 and V >= 0 and E >= 0, (
            year, n_seeds, P, V, E)
        slots = [
            self.seed_names[i]
            for i in range(37)
            if ACTIVATION[i] == year and SEEDS[i][2] not in ("A", "S")
        ]
        # New big seeds first so outsized first papers land on them.
        slots.sort(key=lambda s: (SEEDS[self.seed_names.index(s)][2] != "big",
                                  self.seed_names.index(s)))
        assert len(slots) == n_seeds, (year, slots, n_seeds)
        if P == 0:
            assert n_seeds == 0 and V == 0 and E == 0
            return

        for ts in self.activation_variants(slots, P, V, E):
            snap = self.snapshot()
            if self.try_plan(year, slots, ts, P, V, E, bigs, smalls):
                return
            self.restore(snap)
        raise AssertionError(("plan_fillers failed", year, n_seeds, P, V, E))

    def try_plan(self, year, slots, ts, P, V, E, bigs, smalls):
        for seed, t in zip(slots, ts):
            authors = [seed] + [self.fresh_name() for _ in range(t)]
            got_v, got_e = self.nets[seed].new_counts(authors)
            assert got_v == t + 1 and got_e == (t + 1) * t // 2
            self.emit(year, authors, [seed])
            P -= 1
            V -= t + 1
            E -= (t + 1) * t // 2
        if P < 0 or V < 0 or E < 0:
            return False
        if P == 0:
            return V == 0 and E == 0

        # Scheduled unit moves for the small seeds.
        moves = self.small_moves(year, smalls, set(slots))
        for seed in moves:
            if P <= 1:
                break  # keep at least one paper for the exact landing
            net = self.nets[seed]
            if V > 0 and E > max(0, V - 1):
                author = self.fresh_name()
                self.emit(year, [seed, author], [seed])
                P, V, E = P - 1, V - 1, E - 1
            elif E > 0 and net.missing_pairs() > 0:
                subset = find_subset(net, 0, 1)
                if subset is None:
                    continue
                self.emit(year, [seed] + subset, [seed])
                P, E = P - 1, E - 1
            else:
                pad = [seed] + ([net.anchor] if net.anchor else [])
                self.emit(year, pad, [seed])
                P -= 1

        # Everything left lands on the big seeds, exactly.
        try:
            self.realize_bigs(year, P, V, E, bigs)
        except AssertionError:
            return False
        return True

    def activation_variants(self, slots, P, V, E):
        n = len(slots)
        if n == 0:
            yield []
            return
        if P == n:
            # Activations must consume (V, E) exactly; search small t-vectors.
            def search(i, v, e, acc):
                if i == n:
                    return list(acc) if v == 0 and e == 0 else None
                for t in range(0, 14):
                    need_v = t + 1
                    need_e = (t + 1) * t // 2
                    if need_v > v or need_e > e:
                        break
                    acc.append(t)
                    found = search(i + 1, v - need_v, e - need_e, acc)
                    if found:
                        return found
                    acc.pop()
                return None

            ts = search(0, V, E, [])
            assert ts is not None, ("activation sizes", P, V, E)
            yield ts
            return
        # Default one co-author each (shrunk if the vertex budget is short),
        # then progressively concentrate the first activation into a large
        # clique that soaks edge budget.
        base = [1] * n
        while sum(t + 1 for t in base) > V:
            k = max(range(n), key=lambda i: base[i])
            assert base[k] > 0, "vertex budget too small for activations"
            base[k] -= 1
        yield list(base)
        for lead in range(2, 15):
            ts = [lead] + [1] * (n - 1)
            while sum(t + 1 for t in ts) > V and max(ts[1:], default=0) > 0:
                k = max(range(1, n), key=lambda i: ts[i], default=0)
                if n == 1 or ts[k] == 0:
                    break
                ts[k] -= 1
            if sum(t + 1 for t in ts) > V:
                continue
            if (lead + 1) * lead // 2 > E:
                break
            yield ts

    def small_moves(self, year, smalls, already_active_this_year):
        out = []
        for seed, target in sorted(smalls.items()):
            i = self.seed_names.index(seed)
            a = ACTIVATION[i]
            if year <= a or seed in already_active_this_year:
                continue
            net = self.nets[seed]
            if net.papers == 0 or net.papers >= target:
                continue
            span = YEAR_HI - a
            due = 1 + ((target - 1) * (year - a) + span - 1) // span if span else target
            deficit = min(due, target) - net.papers
            out.extend([seed] * max(0, deficit))
        return out

    def realize_bigs(self, year, P, V, E, bigs):
        if P == 0:
            assert V == 0 and E == 0, (year, V, E)
            return
        hosts = [b for b in bigs if self.nets[b].papers > 0]
        assert hosts, (year, "no active big seed")
        cycle = [0]

        def pick_host(t, remaining, last):
            if remaining > 0:
                # Edge-hungry papers go where the most slack is.
                return max(hosts,
                           key=lambda b: (self.host_bound(self.nets[b], t), b))
            if t > 0 and year <= 2006:
                # Concentrate early structure on the oldest seeds so their
                # sparse regions can absorb later edge bursts.
                host = hosts[cycle[0] % min(3, len(hosts))]
                cycle[0] += 1
                return host
            return min(hosts, key=lambda b: (self.nets[b].papers, b))

        for parts in self.partitions(V, P):
            spare = P - len(parts)
            base = sum(t + t * (t - 1) // 2 for t in parts)
            extra = E - base
            if extra < 0:
                continue
            for jobs in (parts + [0] * spare, [0] * spare + parts):
                snap = self.snapshot()
                if self.run_jobs(year, jobs, extra, pick_host):
                    return
                self.restore(snap)
        raise AssertionError(("realize_bigs failed", year, P, V, E))

    # -- decoys, output, verification -----------------------------------

    def add_decoys(self):
        for year, authors in DECOYS:
            self.records.append((year, self.seq, list(authors)))
            self.seq += 1

    def rows(self):
        ordered = sorted(self.records, key=lambda r: (r[0], r[1]))
        rows = []
        for n, (year, _, authors) in enumerate(ordered, start=1):
            title = "{} {} {}".format(
                TITLE_WORDS_A[n % len(TITLE_WORDS_A)],
                TITLE_WORDS_B[(n // 7) % len(TITLE_WORDS_B)],
                TITLE_WORDS_C[(n // 3) % len(TITLE_WORDS_C)],
            )
            rows.append({
                "id": f"p{n:04d}",
                "year": year,
                "title": title,
                "authors": authors,
            })
        return rows


def verify(rows):
    """Recomputes every series from the emitted rows and checks the targets."""
    seed_names = [name for name, _, _ in SEEDS]
    seed_keys = {norm(n): n for n in seed_names}

    # Registry sanity: normalized names collide only intentionally (never).
    all_names = {}
    for row in rows:
        assert 1 <= len(row["authors"]) <= 40
        assert YEAR_LO <= row["year"] <= YEAR_HI
        for a in row["authors"]:
            key = norm(a)
            assert all_names.get(key, a) == a, f"name collision: {a}"
            all_names[key] = a

    def papers_of(seed, up_to):
        return [
            r for r in rows
            if r["year"] <= up_to and seed in r["authors"]
        ]

    def net_counts(seed, up_to):
        vs, es = set(), set()
        for r in papers_of(seed, up_to):
            vs.update(r["authors"])
            es.update(pairs(r["authors"]))
        return len(vs), len(es)

    for table, seed in ((FEATURED_A, "Arifah Abdul Basir"),
                        (FEATURED_S, "Syed Aiman Mohd Nasir")):
        for year, (p, v, e) in table.items():
            got = (len(papers_of(seed, year)),) + net_counts(seed, year)
            assert got == (p, v, e), (seed, year, got, (p, v, e))

    for year, (s, p, v, e) in AGGREGATE.items():
        active = 0
        ids, vs, es = set(), set(), set()
        for seed in seed_names:
            ps = papers_of(seed, year)
            if not ps:
                continue
            active += 1
            for r in ps:
                ids.add(r["id"])
                vs.update(r["authors"])
                es.update(pairs(r["authors"]))
        got = (active, len(ids), len(vs), len(es))
        assert got == (s, p, v, e), (year, got, (s, p, v, e))

    # Paper-count statistics used by the randomness analysis.
    totals = [len(papers_of(seed, YEAR_HI)) for seed in seed_names]
    ordered = sorted(totals)
    median = ordered[18]
    assert median == 14, (median, ordered)
    above = sum(1 for t in totals if t >= median)
    assert above == 19 and len(totals) - above == 18, totals
    labels = ["A" if t >= median else "B" for t in totals]
    runs = 1 + sum(1 for i in range(1, 37) if labels[i] != labels[i - 1])
    assert runs == 21, (runs, "".join(labels))

    cats = [cat for _, cat, _ in SEEDS]
    assert cats.count("pr") == 13 and cats.count("ap") == 24
    cruns = 1 + sum(1 for i in range(1, 37) if cats[i] != cats[i - 1])
    assert cruns == 18, (cruns, cats)

    # Occurrence counts: phrase hits equal paper counts for every seed;
    # the decoys give the featured seeds extra bag hits only.
    def tokens_of(row):
        toks = []
        for w in row["title"].split():
            toks.append("".join(c for c in w.lower() if c.isalnum()))
        for a in row["authors"]:
            toks.extend(norm(a).split())
        return toks

    def hits(seed_name):
        q = norm(seed_name).split()
        phrase = bag = 0
        for row in rows:
            toks = tokens_of(row)
            if all(t in toks for t in q):
                bag += 1
                for i in range(len(toks) - len(q) + 1):
                    if toks[i:i + len(q)] == q:
                        phrase += 1
                        break
        return phrase, bag

    for seed in seed_names:
        n_p = len(papers_of(seed, YEAR_HI))
        phrase, bag = hits(seed)
        assert phrase == n_p, (seed, phrase, n_p)
        if seed == "Arifah Abdul Basir":
            assert bag == n_p + 3, (seed, bag, n_p)
        elif seed == "Syed Aiman Mohd Nasir":
            assert bag == n_p + 2, (seed, bag, n_p)
        else:
            assert bag == n_p, (seed, bag, n_p)

    roles = {name: role for name, _, role in SEEDS}
    by_seed = {seed: len(papers_of(seed, YEAR_HI)) for seed in seed_names}
    for seed, total in by_seed.items():
        role = roles[seed]
        if role == "big":
            assert total >= 15, (seed, total)
        elif role == "small":
            assert total <= 13, (seed, total)
        elif role == "mid":
            assert total == 14, (seed, total)
    expected_small = {  # fixed targets
        seed_names[i]: t for i, t in SMALL_TARGETS.items()
    }
    for seed, t in expected_small.items():
        assert by_seed[seed] == t, (seed, by_seed[seed], t)

    return totals


def main():
    gen = Generator()
    gen.build()
    gen.add_decoys()
    rows = gen.rows()
    totals = verify(rows)

    os.makedirs(OUT_DIR, exist_ok=True)
    corpus_path = os.path.join(OUT_DIR, "sample_corpus.jsonl")
    with open(corpus_path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
    seeds_path = os.path.join(OUT_DIR, "seeds.tsv")
    with open(seeds_path, "w", encoding="utf-8") as f:
        for name, cat, _ in SEEDS:
            f.write(f"{name}\t{cat}\n")

    print(f"records: {len(rows)}")
    print(f"actors: {len({norm(a) for r in rows for a in r['authors']})}")
    print("per-seed paper totals:", totals)


if __name__ == "__main__":
    sys.setrecursionlimit(100000)
    main()
