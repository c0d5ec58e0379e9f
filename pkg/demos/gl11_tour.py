"""A guided tour of the smallest case: gl(1|1).

The single positive root e1-e2 is odd, so the Jordanian deformation
parameter is odd too.  This script builds the r-matrix, checks the
classical Yang-Baxter equation, constructs the twist and shows the twisted
coproduct of every carrier element.
"""

from supertwist import (
    build_algebra,
    chain_cybe_residual,
    element_inverse,
    leg_emb,
    make_chain,
    stage_twist,
    super_flip,
    twisted_coproduct,
    universal_r,
)


def main():
    alg = build_algebra("gl", 1, 1)
    chain = make_chain(alg)
    stage = chain.stages[0]
    car = stage.carrier

    print("algebra:", alg.label)
    print("odd deformation parameter:", stage.param_name)
    print("h_theta =", alg.elem_str(car.h_theta))
    print("e_theta =", alg.elem_str(car.e_theta))

    ctx2 = chain.context(2)
    r = chain.rmatrix(ctx2)
    print("\nr =", r)
    res = chain_cybe_residual(chain, backend="matrix")
    print("CYBE residual (matrix backend, exact):", res)

    f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car,
                    stage.param_name)
    print("\ntwist F =", f)
    print("F F^-1 =", f * element_inverse(f))

    ctx1 = chain.context(1)
    print("\ntwisted coproducts:")
    for elem in (car.h_theta, car.e_theta):
        x = ctx1.embed(0, elem)
        print("  Delta_xi(%s) = %s" % (alg.elem_str(elem),
                                       twisted_coproduct(f, x, ctx2)))

    rmat = universal_r(f)
    print("\nuniversal R-matrix:", rmat)
    print("triangularity R21 R =", super_flip(rmat, 0, 1) * rmat)


if __name__ == "__main__":
    main()
