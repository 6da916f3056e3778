"""Order-theoretic engine for small finite posets.

Elements are referred to by index; the whole order lives in two arrays of
integer bitmasks (``downs[i]`` = indices below-or-equal to i, ``ups[i]`` the
dual).  Meets and joins are found purely from the order: the greatest lower
bound of a set exists iff some element's down-set equals the intersection of
the members' down-sets.  Nothing here knows any closed-form formula, which
is what makes these routines usable as independent oracles.
"""

from __future__ import annotations

from .relations import bits

__all__ = ["OrderCore"]


class OrderCore:
    def __init__(self, items: list, leq) -> None:
        n = len(items)
        downs = [0] * n
        ups = [0] * n
        for i in range(n):
            for j in range(n):
                if leq(items[j], items[i]):
                    downs[i] |= 1 << j
                    ups[j] |= 1 << i
        self.n = n
        self.downs = downs
        self.ups = ups
        self._dmap = {d: i for i, d in enumerate(downs)}
        self._umap = {u: i for i, u in enumerate(ups)}
        self._all = (1 << n) - 1
        self._meet_table: list[list[int | None]] | None = None
        self._join_table: list[list[int | None]] | None = None
        self._covers: tuple[tuple[int, int], ...] | None = None
        self._heights: list[int] | None = None

    # -- bounds ------------------------------------------------------------

    @property
    def bottom(self) -> int | None:
        return self._umap.get(self._all)

    @property
    def top(self) -> int | None:
        return self._dmap.get(self._all)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.downs[j] >> i & 1)

    # -- meets and joins, order-only ----------------------------------------

    def meet(self, i: int, j: int) -> int | None:
        return self._dmap.get(self.downs[i] & self.downs[j])

    def join(self, i: int, j: int) -> int | None:
        return self._umap.get(self.ups[i] & self.ups[j])

    def glb(self, idxs) -> int | None:
        acc = self._all
        for i in idxs:
            acc &= self.downs[i]
        return self._dmap.get(acc)

    def lub(self, idxs) -> int | None:
        acc = self._all
        for i in idxs:
            acc &= self.ups[i]
        return self._umap.get(acc)

    def minimal_of(self, mask: int) -> list[int]:
        """Minimal elements of the index set ``mask``."""
        return [i for i in bits(mask) if self.downs[i] & mask == 1 << i]

    def maximal_of(self, mask: int) -> list[int]:
        return [i for i in bits(mask) if self.ups[i] & mask == 1 << i]

    def upper_bounds(self, idxs) -> int:
        acc = self._all
        for i in idxs:
            acc &= self.ups[i]
        return acc

    def lower_bounds(self, idxs) -> int:
        acc = self._all
        for i in idxs:
            acc &= self.downs[i]
        return acc

    def meet_table(self) -> list[list[int | None]]:
        if self._meet_table is None:
            dmap = self._dmap
            downs = self.downs
            self._meet_table = [[dmap.get(di & dj) for dj in downs] for di in downs]
        return self._meet_table

    def join_table(self) -> list[list[int | None]]:
        if self._join_table is None:
            umap = self._umap
            ups = self.ups
            self._join_table = [[umap.get(ui & uj) for uj in ups] for ui in ups]
        return self._join_table

    # -- shape --------------------------------------------------------------

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Edges of the transitive reduction, (low, high), sorted."""
        if self._covers is None:
            out = []
            for j in range(self.n):
                below = self.downs[j] & ~(1 << j)
                for i in bits(below):
                    between = self.ups[i] & self.downs[j] & ~(1 << i) & ~(1 << j)
                    if not between:
                        out.append((i, j))
            self._covers = tuple(sorted(out))
        return self._covers

    def heights(self) -> list[int]:
        """Length of the longest chain strictly below each element."""
        if self._heights is None:
            order = sorted(range(self.n), key=lambda i: self.downs[i].bit_count())
            h = [0] * self.n
            for j in order:
                below = self.downs[j] & ~(1 << j)
                h[j] = max((h[i] + 1 for i in bits(below)), default=0)
            self._heights = h
        return self._heights

    def dual(self) -> "OrderCore":
        out = object.__new__(OrderCore)
        out.n = self.n
        out.downs = self.ups
        out.ups = self.downs
        out._dmap = self._umap
        out._umap = self._dmap
        out._all = self._all
        out._meet_table = None
        out._join_table = None
        out._covers = None
        out._heights = None
        return out

    # -- isomorphism search ---------------------------------------------------

    def _signature(self, i: int, covers_up: list[int], covers_dn: list[int], h: list[int], d: list[int]) -> tuple:
        return (
            self.downs[i].bit_count(),
            self.ups[i].bit_count(),
            covers_up[i],
            covers_dn[i],
            h[i],
            d[i],
        )

    def find_isomorphism(self, other: "OrderCore") -> list[int] | None:
        """An order-isomorphism onto ``other`` as an index map, or None.

        Backtracking over signature-compatible images; signatures combine
        down-set and up-set sizes, cover degrees, height and depth.
        """
        if self.n != other.n:
            return None

        def degs(core: OrderCore) -> tuple[list[int], list[int]]:
            up = [0] * core.n
            dn = [0] * core.n
            for i, j in core.covers():
                up[i] += 1
                dn[j] += 1
            return up, dn

        sup, sdn = degs(self)
        oup, odn = degs(other)
        sh, sd = self.heights(), self.dual().heights()
        oh, od = other.heights(), other.dual().heights()
        sig_s = [self._signature(i, sup, sdn, sh, sd) for i in range(self.n)]
        sig_o = [other._signature(i, oup, odn, oh, od) for i in range(other.n)]
        if sorted(sig_s) != sorted(sig_o):
            return None
        candidates = [[j for j in range(other.n) if sig_o[j] == sig_s[i]] for i in range(self.n)]
        order = sorted(range(self.n), key=lambda i: len(candidates[i]))
        image = [-1] * self.n
        used = [False] * other.n

        def assign(pos: int) -> bool:
            if pos == self.n:
                return True
            i = order[pos]
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for q in range(pos):
                    k = order[q]
                    if (self.downs[i] >> k & 1) != (other.downs[j] >> image[k] & 1) or (
                        self.downs[k] >> i & 1
                    ) != (other.downs[image[k]] >> j & 1):
                        ok = False
                        break
                if not ok:
                    continue
                image[i] = j
                used[j] = True
                if assign(pos + 1):
                    return True
                image[i] = -1
                used[j] = False
            return False

        return image if assign(0) else None
