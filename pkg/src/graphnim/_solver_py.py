"""Pure-Python solver backend.

Retrograde (memoized) win/loss evaluation with an explicit stack, so the
recursion depth never hits the interpreter limit no matter how tall the
weight configuration is. Memo keys are canonical representatives of the
automorphism orbit, packed into integers at a fixed 17 bits per edge.
"""

from __future__ import annotations

import itertools

from .topology import EdgePerm, GraphTopology, Weights

_KEY_BITS = 17  # holds weights up to the 2**16 API cap


class PySolverBackend:
    """Dict-memoized evaluation; ``outcome`` returns True when the player
    to move wins."""

    name = "python"

    def __init__(self, topology: GraphTopology, perms: tuple[EdgePerm, ...]):
        self.topology = topology
        # Drop the identity and skip canonicalization entirely when the
        # symmetry group is trivial.
        identity = tuple(range(len(topology.edges)))
        self._perms = tuple(p for p in perms if p != identity)
        self._vertex_edges = tuple(
            topology.incidence[v] for v in topology.vertices if topology.incidence[v]
        )
        self.memo: dict[int, bool] = {}

    def _canon(self, w: Weights) -> Weights:
        best = w
        for perm in self._perms:
            candidate = tuple(w[perm[i]] for i in range(len(perm)))
            if candidate < best:
                best = candidate
        return best

    @staticmethod
    def _pack(w: Weights) -> int:
        key = 0
        for x in w:
            key = (key << _KEY_BITS) | x
        return key

    def _successors(self, w: Weights):
        for edges in self._vertex_edges:
            cur = tuple(w[e] for e in edges)
            for new_vals in itertools.product(*(range(c + 1) for c in cur)):
                if new_vals == cur:
                    continue
                nw = list(w)
                for e, nv in zip(edges, new_vals):
                    nw[e] = nv
                yield tuple(nw)

    def outcome(self, weights: Weights) -> bool:
        memo = self.memo
        root = self._canon(weights)
        root_key = self._pack(root)
        if root_key in memo:
            return memo[root_key]
        # Stack frames: [key, successor iterator, pending child key].
        stack = [[root_key, self._successors(root), None]]
        while stack:
            frame = stack[-1]
            key, it, pending = frame
            if pending is not None:
                frame[2] = None
                if memo[pending] is False:
                    memo[key] = True
                    stack.pop()
                    continue
            advanced = False
            for succ in it:
                canon = self._canon(succ)
                skey = self._pack(canon)
                result = memo.get(skey)
                if result is False:
                    memo[key] = True
                    stack.pop()
                    advanced = True
                    break
                if result is None:
                    frame[2] = skey
                    stack.append([skey, self._successors(canon), None])
                    advanced = True
                    break
            if not advanced:
                # Every successor wins for the opponent (or none exist).
                memo[key] = False
                stack.pop()
        return memo[root_key]
