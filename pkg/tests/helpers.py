from hyperforge.core import Structure, mask_of


def structure(k, m, n, f, g):
    return Structure.from_functions(k, m, n, f, g)


def pair_product(k, n=2):
    """f(x, y) = {x, y}, g = product mod k."""
    def g(*xs):
        out = 1
        for x in xs:
            out *= x
        return out % k
    return structure(k, 2, n, lambda x, y: (x, y), g)


def total(k, m=2, n=2, c=0):
    return structure(k, m, n, lambda *xs: range(k), lambda *xs: c)


def subset(*xs):
    return mask_of(xs)
