from capverify.taylor_ad import JetFunction, TaylorJet, as_jet, jet_tan


def change_of_variables_halfcircle(f: JetFunction) -> JetFunction:
    """
    x = 2 tan(y/2) maps (-pi, pi) onto the real line, dx = sec(y/2)**2 dy = (1 + tan(y/2)**2) dy.

    >>> from capverify.quad_rigor.integrands import value_enclosure
    >>> g = change_of_variables_halfcircle(lambda x: 1 / (1 + x * x))
    >>> value_enclosure(g, 0)
    Interval(lo=1.0, hi=1.0)
    """

    def transformed(y: TaylorJet) -> TaylorJet:
        t = jet_tan(y / 2)
        return as_jet(f(t * 2), like=y) * (t * t + 1)

    return transformed
