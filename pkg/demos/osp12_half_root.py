"""osp(1|2): the half-root carrier and the antipode machinery.

Here theta = 2 eps1 has the odd root eps1 = theta/2 below it, so the twist
carries an extra factor built from the half-root vector, and the folding
element u = ((S_xi (x) Id) F) o 1 picks up a group-like contribution.  The
script prints the folding, its square root w, and verifies w^2 = u.
"""

from supertwist import (
    build_algebra,
    element_inverse,
    extension_twist,
    leg_emb,
    leg_map,
    make_chain,
    stage_twist,
    transform,
    w_builder,
)
from supertwist.twist import twisted_antipode_genmap


def main():
    alg = build_algebra("osp", 1, 2)
    chain = make_chain(alg, truncation=4)
    stage = chain.stages[0]
    car = stage.carrier

    print("algebra:", alg.label)
    print("theta =", car.theta.label, " half root =", car.half_root.label)
    print("half-root vector x =", alg.elem_str(car.half),
          " (stored so that 4 x^2 = e_theta)")

    ctx1 = chain.context(1)
    ctx2 = chain.context(2)
    f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car,
                    stage.param_name)
    print("\ntwist F (to order 2):", f.truncate(2))

    # fold the extension factor with the twisted antipode on the left leg:
    # u = ((S_xi (x) Id) F_N) o 1
    fn = extension_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car,
                         stage.param_name)
    u = transform(fn, ctx1,
                  [twisted_antipode_genmap(ctx1, car, stage.param_name),
                   leg_map(ctx1, 0)])
    print("\nfolding u =", u)
    uinv = element_inverse(u)
    print("u u^-1 =", u * uinv)

    w = w_builder(ctx1, leg_emb(ctx1, 0), car, stage.param_name)
    print("\nclosed-form square root w =", w)
    print("w^2 - u =", w * w - u)


if __name__ == "__main__":
    main()
