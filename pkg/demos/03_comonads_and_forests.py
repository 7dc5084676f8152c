"""Comonad law checking, coalgebras, sharp lifts and rooted forests.

The monoid-action functor E(A) = A^M carries a comonad structure whose
Eilenberg-Moore coalgebras are exactly the M-sets. Rooted forests play
the same game for the duplicate-free list functor: the structure map
sends each vertex to its path to the root.
"""

from msetramsey import (DistinctListFunctor, MonoidActionFunctor,
                        check_comonad_laws, classify_coalgebra,
                        encode_forest, fig1_forest, mset_to_coalgebra,
                        sharp_lift, validate_mset, z2)


def main():
    m = z2()
    print("== comonad laws ==")
    report = check_comonad_laws(MonoidActionFunctor(m), range(2))
    for name, ok, _ in report.laws:
        print(f"  {name}: {'ok' if ok else 'FAIL'}")

    print("\n== a mutation is caught with a witness ==")
    bad = check_comonad_laws(MonoidActionFunctor(m), range(2),
                             epsilon=lambda h: h[-1])
    for name, cx in bad.failures():
        print(f"  {name} fails at {cx}")

    print("\n== M-sets are EM coalgebras ==")
    swap = validate_mset(m, ("a1", "a2"), [[0, 1], [1, 0]])
    coalg = mset_to_coalgebra(swap)
    print("classification:", classify_coalgebra(coalg)[0])
    hom = sharp_lift(coalg, {"a1": "x", "a2": "y"}, ("x", "y"))
    print("sharp lift of a1 -> x, a2 -> y into the cofree coalgebra:")
    for a, h in hom.map.items():
        print(f"  {a} -> {h}")

    print("\n== rooted forests as coalgebras ==")
    forest = fig1_forest()
    coalg = encode_forest(forest)
    print("root paths of the ten-vertex reference forest:")
    for label in coalg.carrier:
        print(f"  alpha({label}) = {coalg.structure_of(label)}")
    print("the suffix comultiplication square commutes:",
          classify_coalgebra(coalg)[0] != "plain")
    assert isinstance(coalg.functor, DistinctListFunctor)


if __name__ == "__main__":
    main()
