"""Independent three-strand closure model."""

from cubichecke.catalog import basis_words
from cubichecke.coeffs import ONE, SpecPoint, LaurentCoeff
from cubichecke.oracle import field_to_laurent, laurent_to_field, oracle_A3


def test_dimension_and_self_check():
    model = oracle_A3()
    assert len(model.basis) == 24
    assert set(model.basis) == set(basis_words(3))
    assert model.self_check() == []


def test_fold_unit_and_generators():
    model = oracle_A3()
    red = model.fold_to_laurent(())
    assert red == {(): ONE}
    red = model.fold_to_laurent((1,))
    assert red == {(1,): ONE}
    # a braid-relation pair of words folds identically
    assert model.fold_to_laurent((1, 2, 1)) == model.fold_to_laurent((2, 1, 2))


def test_cube_relation_in_model():
    model = oracle_A3()
    lhs = [(ONE, (1, 1, 1))]
    rhs = [
        (LaurentCoeff.mono(1, 1, 0, 0), (1, 1)),
        (LaurentCoeff.mono(1, 0, 1, 0), (1,)),
        (LaurentCoeff.mono(1, 0, 0, 1), ()),
    ]
    assert model.check_word_identity(lhs, rhs)


def test_inverse_words_fold_to_unit():
    model = oracle_A3()
    for w in ((1, -1), (2, -2), (1, 2, -2, -1), (-2, -1, 1, 2)):
        assert model.fold_to_laurent(w) == {(): ONE}


def test_field_laurent_roundtrip():
    for coeff in (ONE, LaurentCoeff.mono(-3, 2, 1, -2)):
        assert field_to_laurent(laurent_to_field(coeff)) == coeff


def test_action_at_point():
    model = oracle_A3()
    at = SpecPoint(0, 0, 0, 1)
    m = model.action_at(1, at)
    assert len(m) == 24 and len(m[0]) == 24
    # at a=b=0, c=1 every generator cubes to the identity
    def mul(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(24))
                 for j in range(24)] for i in range(24)]
    m3 = mul(m, mul(m, m))
    ident = [[1 if i == j else 0 for j in range(24)] for i in range(24)]
    assert m3 == ident
