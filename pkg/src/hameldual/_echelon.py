"""Incremental exact row reduction over sparse vectors.

Vectors are plain ``dict`` objects mapping an index to a nonzero scalar.
Each stored row is normalized so its pivot (the smallest index in the given
order) has coefficient one, and it remembers how it was built from the
inserted vectors.  That bookkeeping gives dependency witnesses, coordinates
in terms of the inserted vectors, and a back-substitution for functionals.
"""


class Echelon:
    def __init__(self, field, key):
        self.field = field
        self.key = key
        self.rows = {}          # pivot -> (row, combo)
        self.inputs = []        # tags in insertion order

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return ``(residual, combo)`` with ``vec = residual + sum(combo[t] * input_t)``.

        No index of the residual is a pivot.
        """
        r = dict(vec)
        combo = {}
        rows = self.rows
        key = self.key
        while True:
            hits = [k for k in r if k in rows]
            if not hits:
                return r, combo
            k = min(hits, key=key)
            c = r[k]
            row, rcombo = rows[k]
            for idx, a in row.items():
                new = r.get(idx, 0) - c * a
                if new == 0:
                    r.pop(idx, None)
                else:
                    r[idx] = new
            for t, b in rcombo.items():
                new = combo.get(t, 0) + c * b
                if new == 0:
                    combo.pop(t, None)
                else:
                    combo[t] = new

    def insert(self, vec, tag):
        """Insert ``vec`` under ``tag``.

        Returns ``None`` when the vector is independent of everything inserted
        so far, otherwise a vanishing combination ``{tag: 1, t: -c_t, ...}``.
        """
        self.inputs.append(tag)
        r, combo = self.reduce(vec)
        one = self.field.one
        if not r:
            witness = {tag: one}
            for t, c in combo.items():
                witness[t] = -c
            return witness
        p = min(r, key=self.key)
        inv = one / r[p]
        row = {k: v * inv for k, v in r.items()}
        rcombo = {tag: inv}
        for t, c in combo.items():
            rcombo[t] = -c * inv
        self.rows[p] = (row, rcombo)
        return None

    def pivots(self):
        return sorted(self.rows, key=self.key)

    def solve_functional(self, values):
        """Values of a functional on each pivot index.

        ``values[t]`` prescribes the functional on inserted vector ``t``.
        Indices that are not pivots get the value zero, which is the
        zero-extension across the complement spanned by those unit vectors.
        """
        result = {}
        zero = self.field.zero
        for p in sorted(self.rows, key=self.key, reverse=True):
            row, rcombo = self.rows[p]
            acc = zero
            for t, c in rcombo.items():
                acc = acc + c * values[t]
            for k, a in row.items():
                if k != p and k in result:
                    acc = acc - a * result[k]
            result[p] = acc
        return {k: v for k, v in result.items() if v != 0}
