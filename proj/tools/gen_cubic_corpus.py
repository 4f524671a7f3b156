#!/usr/bin/env python3
"""Write all 3-connected cubic graphs on 4..10 vertices as graph6.

Backtracking over vertices in order, filling each vertex's remaining degree.
Untouched vertices are interchangeable, so at most one new (untouched) vertex
is offered per choice, the lowest-numbered one. Isomorphs are then removed
with networkx.

    python3 tools/gen_cubic_corpus.py > tests/data/cubic_3conn_le10.g6
"""

import sys

import networkx as nx


def cubic_graphs(n):
    adj = [set() for _ in range(n)]
    out = []

    def touched_limit():
        t = 0
        for v in range(n):
            if adj[v]:
                t = v + 1
        return t

    def fill(v):
        if v == n:
            out.append([tuple(sorted((a, b))) for a in range(n) for b in adj[a] if a < b])
            return
        need = 3 - len(adj[v])
        if need == 0:
            fill(v + 1)
            return
        if need < 0:
            return
        limit = max(touched_limit(), v + 1)
        cands = [w for w in range(v + 1, min(limit, n)) if len(adj[w]) < 3 and w not in adj[v]]
        fresh = list(range(limit, n))

        def choose(start, picked, fresh_used):
            if len(picked) == need:
                for w in picked:
                    adj[v].add(w)
                    adj[w].add(v)
                fill(v + 1)
                for w in picked:
                    adj[v].discard(w)
                    adj[w].discard(v)
                return
            for i in range(start, len(cands)):
                choose(i + 1, picked + [cands[i]], fresh_used)
            if fresh_used < len(fresh) and (not picked or picked[-1] in cands or picked[-1] < fresh[fresh_used]):
                choose(len(cands), picked + [fresh[fresh_used]], fresh_used + 1)

        choose(0, [], 0)

    fill(0)
    return out


def classes(n):
    reps = []
    buckets = {}
    for es in cubic_graphs(n):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(es)
        key = nx.weisfeiler_lehman_graph_hash(g)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


def main():
    for n in (4, 6, 8, 10):
        reps = classes(n)
        connected = [g for g in reps if nx.is_connected(g)]
        three = [g for g in connected if nx.node_connectivity(g) >= 3]
        print(f"n={n}: {len(connected)} connected, {len(three)} 3-connected", file=sys.stderr)
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in three)
        for line in lines:
            print(line)


if __name__ == "__main__":
    main()
