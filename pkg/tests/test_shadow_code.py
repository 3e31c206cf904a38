import random

import numpy as np
import pytest

from shadowcodes import (
    ERASED,
    FiniteField,
    GeneratorMatrix,
    Polynomial,
    ShadowCodeSpec,
    build,
    construct_code,
    dimension_condition,
    encode_direct,
    erasure_decode,
    hamming_weight,
    load_matrix,
)
from shadowcodes.errors import (
    Ambiguous,
    BadPositions,
    DimensionMismatch,
    Inconsistent,
    NotEnoughPolynomials,
    OrderMismatch,
    ZeroArgument,
)

GOLDEN_ROW1 = [0, 0, 1, 1, 1, 1, 0]
GOLDEN_ROW2 = [1, 1, 0, 0, 0, 1, 1]


def test_build_golden_rows(golden_matrix):
    assert golden_matrix.rows.tolist() == [GOLDEN_ROW1, GOLDEN_ROW2]


def test_build_single_row(f7):
    spec = ShadowCodeSpec(f7, 2, [Polynomial(f7, [1, 0, 1])])
    assert build(spec).rows.tolist() == [GOLDEN_ROW1]


def test_matrix_entries_match_character(golden_spec, golden_matrix):
    chi = golden_spec.chi
    for i, poly in enumerate(golden_spec.polys):
        for j in (0, 3, 6):
            assert golden_matrix.rows[i, j] == chi(poly(j))


def test_build_rooted_polynomial_raises(f7):
    spec = ShadowCodeSpec(f7, 2, [Polynomial(f7, [0, 0, 1])], validate=False)
    with pytest.raises(ZeroArgument):
        build(spec)


def test_spec_validation(f7):
    good = Polynomial(f7, [1, 0, 1])
    with pytest.raises(ValueError):
        ShadowCodeSpec(f7, 2, [])
    with pytest.raises(ValueError):
        ShadowCodeSpec(f7, 2, [good, good])
    with pytest.raises(ValueError):
        ShadowCodeSpec(f7, 2, [Polynomial(f7, [6, 0, 1])])  # reducible
    with pytest.raises(ValueError):
        ShadowCodeSpec(f7, 2, [Polynomial(f7, [1, 1])])  # degree 1
    with pytest.raises(OrderMismatch):
        ShadowCodeSpec(f7, 5, [good])  # 5 does not divide 6


def test_encode(golden_matrix):
    cw = golden_matrix.encode([1, 1])
    assert cw.tolist() == [1, 1, 1, 1, 1, 0, 1]
    assert hamming_weight(cw) == 6
    assert golden_matrix.encode([1, 0]).tolist() == GOLDEN_ROW1
    assert hamming_weight(golden_matrix.encode([0, 0])) == 0
    with pytest.raises(DimensionMismatch):
        golden_matrix.encode([1, 0, 1])


def test_encode_matches_direct_evaluation_all_messages(golden_spec, golden_matrix):
    for m in range(4):
        v = [m & 1, m >> 1]
        direct = encode_direct(golden_spec, v)
        assert (golden_matrix.encode(v) == direct).all()


def test_encode_matches_direct_r3():
    from shadowcodes import enumerate_monic_irreducibles

    f13 = FiniteField(13)
    spec = ShadowCodeSpec(f13, 3, enumerate_monic_irreducibles(f13, 2, 2))
    G = build(spec)
    for m in range(9):
        v = [m % 3, m // 3]
        assert (G.encode(v) == encode_direct(spec, v)).all()


def test_encode_matches_direct_extension_field():
    from shadowcodes import enumerate_monic_irreducibles

    f9 = FiniteField(3, 2)
    spec = ShadowCodeSpec(f9, 2, enumerate_monic_irreducibles(f9, 2, 2))
    G = build(spec)
    for m in range(4):
        v = [m & 1, m >> 1]
        assert (G.encode(v) == encode_direct(spec, v)).all()


def test_direct_evaluation_linear(golden_spec):
    rng = random.Random(5)
    for _ in range(100):
        y = [rng.randrange(2) for _ in range(2)]
        z = [rng.randrange(2) for _ in range(2)]
        lhs = encode_direct(golden_spec, [(a + b) % 2 for a, b in zip(y, z)])
        rhs = (encode_direct(golden_spec, y) + encode_direct(golden_spec, z)) % 2
        assert (lhs == rhs).all()


def test_well_definedness_under_exponent_lifts(golden_spec):
    rng = random.Random(6)
    for _ in range(50):
        v = [rng.randrange(2) for _ in range(2)]
        s = [rng.randrange(4) for _ in range(2)]
        lifted = [e + 2 * k for e, k in zip(v, s)]
        a = encode_direct(golden_spec, v)
        b = encode_direct(golden_spec, lifted, reduce_exponents=False)
        assert (a == b).all()


def test_rank(golden_matrix):
    assert golden_matrix.rank() == 2
    assert GeneratorMatrix(2, np.zeros((1, 7), dtype=np.uint8)).rank() == 0
    g = np.array([GOLDEN_ROW1, GOLDEN_ROW1], dtype=np.uint8)
    assert GeneratorMatrix(2, g).rank() == 1


def test_dimension_condition():
    ok, threshold = dimension_condition(10007, 2, 16, 2)
    assert ok and threshold == pytest.approx(10006 / (32 * 10007**0.5))
    ok, _ = dimension_condition(7, 2, 2, 2)
    assert not ok


def test_construct_code_q1301():
    report = construct_code(1301, 2, epsilon=0.25)
    assert report.L == 6
    assert report.rank == 6
    assert report.claimed_dimension == 6
    assert report.epsilon_distance_bound == pytest.approx(
        1301 / 2 - 2 * 1301**0.75
    )
    assert report.recipe_inequality_holds
    assert report.prop_condition_holds
    assert not report.small_q_warning


def test_construct_code_small_q_warns():
    with pytest.warns(UserWarning):
        report = construct_code(7, 2, epsilon=0.25)
    assert report.L == 1
    assert report.epsilon_distance_bound < 0
    assert report.small_q_warning


def test_construct_code_order_mismatch():
    with pytest.raises(OrderMismatch):
        construct_code(8, 3, epsilon=0.3)


def test_construct_code_not_enough_polynomials():
    with pytest.raises(NotEnoughPolynomials):
        construct_code(7, 2, L=25)


def test_puncture(golden_matrix):
    same = golden_matrix.puncture([])
    assert (same.rows == golden_matrix.rows).all()
    shorter = golden_matrix.puncture({0})
    assert shorter.n == 6
    assert shorter.rank() == 2
    assert shorter.rows.tolist() == [GOLDEN_ROW1[1:], GOLDEN_ROW2[1:]]
    with pytest.raises(BadPositions):
        golden_matrix.puncture(range(7))
    with pytest.raises(BadPositions):
        golden_matrix.puncture([9])


def test_erasure_decode_roundtrip(golden_matrix):
    cw = golden_matrix.encode([1, 0])
    received = list(cw)
    received[0] = ERASED
    received[1] = ERASED
    assert erasure_decode(golden_matrix, received).tolist() == [1, 0]


def test_erasure_decode_no_erasures(golden_matrix):
    cw = golden_matrix.encode([1, 1])
    assert erasure_decode(golden_matrix, list(cw)).tolist() == [1, 1]


def test_erasure_decode_all_erased(golden_matrix):
    with pytest.raises(Ambiguous):
        erasure_decode(golden_matrix, [ERASED] * 7)


def test_erasure_decode_inconsistent(golden_matrix):
    cw = list(golden_matrix.encode([1, 1]))
    cw[0] ^= 1  # corrupt one coordinate: no message matches all 7 equations
    with pytest.raises(Inconsistent):
        erasure_decode(golden_matrix, cw)


def test_erasure_decode_length_check(golden_matrix):
    with pytest.raises(DimensionMismatch):
        erasure_decode(golden_matrix, [0, 1])


def test_save_load_text(tmp_path, golden_matrix):
    path = tmp_path / "m.txt"
    golden_matrix.save_text(path)
    assert path.read_text().splitlines()[0] == "7 2 2"
    loaded = load_matrix(path)
    assert (loaded.rows == golden_matrix.rows).all()
    assert loaded.r == 2 and loaded.spec is None


def test_save_load_json(tmp_path, golden_matrix):
    path = tmp_path / "m.json"
    golden_matrix.save_json(path)
    loaded = load_matrix(path)
    assert (loaded.rows == golden_matrix.rows).all()
    assert loaded.spec is not None
    assert [p.serialize() for p in loaded.spec.polys] == [[1, 0, 1], [3, 1, 1]]


def test_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("")
    with pytest.raises(ValueError):
        load_matrix(path)
    path.write_text("7 2 1\n132\n")
    with pytest.raises(ValueError):
        load_matrix(path)
