#!/usr/bin/env python3
"""Regenerate the bundled graph6 assets and their manifest.

Self-contained on purpose: enumeration, canonicalization, and graph6 encoding
are all reimplemented here rather than imported from the package, so the
assets are derived independently of the code that later consumes them.

Produces, under src/leechlab/data/:
  small_connected_2_5.g6  every connected graph on 2..5 vertices, once per
                          isomorphism class, sorted by (order, size, bytes)
  beineke.g6              the nine minimal graphs that are not line graphs
                          (claw first), each verified with two oracles:
                          networkx.inverse_line_graph and a brute-force
                          root-graph search
  manifest.json           sha256 checksums, counts, and stable names

Requires networkx (used only here, not by the package).
"""

import hashlib
import itertools
import json
import sys
from pathlib import Path

import networkx as nx

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "leechlab" / "data"

# connected graph counts per order, for cross-checking the enumeration
EXPECTED_CONNECTED = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def pair_index(i, j):
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def mask_edges(n, mask):
    return [
        (i, j)
        for j in range(1, n)
        for i in range(j)
        if mask >> pair_index(i, j) & 1
    ]


def is_connected(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def canonical_mask(n, mask, perms):
    pidx = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for perm in perms:
        m2 = 0
        for k, (i, j) in enumerate(pidx):
            if mask >> k & 1:
                m2 |= 1 << pair_index(perm[i], perm[j])
        if best is None or m2 < best:
            best = m2
    return best


def connected_classes(n):
    perms = list(itertools.permutations(range(n)))
    seen, out = set(), []
    for mask in range(1 << (n * (n - 1) // 2)):
        edges = mask_edges(n, mask)
        if not edges or not is_connected(n, edges):
            continue
        c = canonical_mask(n, mask, perms)
        if c not in seen:
            seen.add(c)
            out.append(mask_edges(n, c))
    return out


def g6_encode(n, edges):
    if n > 62:
        raise ValueError("order field > 62 not supported")
    present = {(min(u, v), max(u, v)) for u, v in edges}
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def to_nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def is_line_graph_nx(g):
    for comp in nx.connected_components(g):
        sub = g.subgraph(comp)
        if sub.number_of_nodes() <= 1:
            continue
        try:
            nx.inverse_line_graph(sub)
        except nx.NetworkXError:
            return False
    return True


def is_line_graph_bruteforce(g):
    """Search for a root graph R with L(R) isomorphic to g, per component."""
    for comp in nx.connected_components(g):
        sub = nx.convert_node_labels_to_integers(g.subgraph(comp))
        k = sub.number_of_nodes()
        if k <= 1:
            continue
        found = False
        for nr in range(2, k + 2):
            allpairs = list(itertools.combinations(range(nr), 2))
            if len(allpairs) < k:
                continue
            for redges in itertools.combinations(allpairs, k):
                r = nx.Graph()
                r.add_nodes_from(range(nr))
                r.add_edges_from(redges)
                lg = nx.line_graph(r)
                if lg.number_of_nodes() == k and nx.is_isomorphic(lg, sub):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def derive_catalog():
    rows = []
    for n in range(2, 6):
        classes = connected_classes(n)
        assert len(classes) == EXPECTED_CONNECTED[n], (n, len(classes))
        # cross-check against the networkx atlas where available
        atlas = [
            a
            for a in nx.graph_atlas_g()
            if a.number_of_nodes() == n
            and a.number_of_edges() >= 1
            and nx.is_connected(a)
        ]
        assert len(atlas) == len(classes), f"atlas disagrees at n={n}"
        rows.extend((n, len(e), g6_encode(n, e)) for e in classes)
    rows.sort()
    return [g6 for _, _, g6 in rows]


def derive_beineke():
    minimal = []
    for n in range(2, 7):
        classes = connected_classes(n)
        assert len(classes) == EXPECTED_CONNECTED[n], (n, len(classes))
        for edges in classes:
            g = to_nx(n, edges)
            if is_line_graph_nx(g):
                continue
            if all(is_line_graph_nx(g.subgraph(set(g) - {v})) for v in g):
                minimal.append((n, edges))
    assert len(minimal) == 9, f"expected 9 minimal non-line graphs, got {len(minimal)}"
    for n, edges in minimal:
        g = to_nx(n, edges)
        assert not is_line_graph_bruteforce(g), (n, edges)
        if n <= 5:
            for v in g:
                assert is_line_graph_bruteforce(g.subgraph(set(g) - {v})), (n, edges, v)

    def sort_key(item):
        n, edges = item
        return (n, len(edges), g6_encode(n, edges))

    minimal.sort(key=sort_key)
    claw = [(n, e) for n, e in minimal if sorted(d for _, d in to_nx(n, e).degree()) == [1, 1, 1, 3]]
    assert len(claw) == 1 and claw[0][0] == 4
    ordered = claw + [item for item in minimal if item != claw[0]]
    names = ["claw"] + [f"beineke-{i}" for i in range(2, 10)]
    return names, [g6_encode(n, e) for n, e in ordered]


def sha256_of(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    catalog = derive_catalog()
    (DATA_DIR / "small_connected_2_5.g6").write_text("\n".join(catalog) + "\n", encoding="ascii")

    names, beineke = derive_beineke()
    (DATA_DIR / "beineke.g6").write_text("\n".join(beineke) + "\n", encoding="ascii")

    manifest = {
        "files": {
            "small_connected_2_5.g6": {
                "sha256": sha256_of(DATA_DIR / "small_connected_2_5.g6"),
                "count": len(catalog),
                "counts_by_order": {str(k): v for k, v in EXPECTED_CONNECTED.items() if k <= 5},
            },
            "beineke.g6": {
                "sha256": sha256_of(DATA_DIR / "beineke.g6"),
                "count": len(beineke),
                "names": names,
            },
        }
    }
    (DATA_DIR / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="ascii")
    print(f"wrote {len(catalog)} catalog graphs and {len(beineke)} forbidden subgraphs")
    for name, g6 in zip(names, beineke):
        print(f"  {name}: {g6}")


if __name__ == "__main__":
    sys.exit(main())
