import pytest

from treelike.alternative import (
    enumerate_at_oracle,
    is_star,
    is_symmetric_at,
    make_at,
    make_atb,
    validate_at,
    validate_atb,
)
from treelike.bijections import (
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    gamma,
    gamma_inv,
    phi,
    phi_b,
    psi,
    psi_b,
)
from treelike.errors import InvalidInput, NotStar, NotSymmetric
from treelike.linked import enumerate_lp, enumerate_lpb, make_lp, make_lpb
from treelike.tableaux import (
    enumerate_sym_tlt_oracle,
    enumerate_tlt_oracle,
    is_symmetric_tlt,
    make_tlt,
    validate_tlt,
)

FIG2 = make_tlt(
    "SWWSWSSWSWSW",
    [(1, 2), (1, 3), (1, 8), (1, 12), (4, 5), (4, 12),
     (6, 8), (7, 10), (7, 12), (9, 10), (11, 12)],
)
FIG3 = make_at("WWSWSSWSWS", [(3, 4, "U"), (5, 7, "L"), (6, 9, "U"), (8, 9, "L")])
FIG5_TABLEAU = make_at(
    "SWWSWSSWSWS",
    [(1, 2, "U"), (1, 3, "U"), (1, 8, "U"), (4, 5, "U"),
     (6, 8, "L"), (7, 10, "U"), (9, 10, "L")],
)
FIG5_PARTITION = make_lp(
    11, [(1, 2), (1, 3), (4, 5), (1, 6), (6, 8), (7, 9), (9, 10)]
)
FIG6 = make_atb(
    "WWSWSWWSWS",
    [(-7, 9, "U"), (-4, 7, "L"), (-2, 6, "U"), (-2, 9, "L"),
     (-1, 4, "L"), (3, 6, "L"), (5, 7, "L"), (8, 9, "L")],
)
FIG7 = make_lpb(
    10,
    [-7, -4, -2, -1, 3, 5, 6, 8, 9, 10],
    [(-7, -4), (-7, -2), (-7, 5), (-4, -1), (-2, 3), (-2, 8), (3, 6), (8, 9)],
)


# --- golden vectors ---------------------------------------------------------


def test_alpha_golden():
    assert alpha(FIG2) == FIG3


def test_beta_golden():
    assert beta(FIG2) == FIG5_TABLEAU


def test_phi_golden():
    assert phi(FIG5_TABLEAU) == FIG5_PARTITION


def test_phib_golden_both_ways():
    assert phi_b(FIG6) == FIG7
    assert psi_b(FIG7) == FIG6


# --- small handcrafted cases ------------------------------------------------


def test_alpha_smallest():
    t = make_tlt("SW", [(1, 2)])
    image = alpha(t)
    assert image.size == 0 and not image.arrows
    assert alpha_inv(image) == t


def test_alpha_square():
    t = make_tlt("SSWW", [(1, 4), (1, 3), (2, 4)])
    image = alpha(t)
    assert image.diagram.word == "SW"
    assert not image.arrows
    assert image.stats.urr == 1 == t.stats.left
    assert alpha_inv(image) == t


def test_beta_smallest():
    t = make_tlt("SW", [(1, 2)])
    image = beta(t)
    assert image.diagram.word == "S" and not image.arrows
    assert image.stats.urr == 1
    assert beta_inv(image) == t


def test_beta_row():
    t = make_tlt("SWW", [(1, 3), (1, 2)])
    image = beta(t)
    assert image == make_at("SW", [(1, 2, "U")])
    assert image.stats.top == 1 == t.stats.top


def test_beta_inv_requires_star():
    with pytest.raises(NotStar):
        beta_inv(make_at("SW", [(1, 2, "L")]))


def test_beta_inv_rejects_empty():
    with pytest.raises(InvalidInput):
        beta_inv(make_at("", []))


def test_gamma_empty():
    image = gamma(make_at("", []))
    assert image.size == 0
    assert gamma_inv(image) == make_at("", [])


def test_gamma_square():
    t = make_at("SSWW", [(1, 3, "L"), (2, 4, "U")])
    image = gamma(t)
    assert image.sub.word == "WW"
    assert image.arrows == frozenset({(-1, 2, "U")})
    assert gamma_inv(image) == t


def test_gamma_requires_symmetric():
    with pytest.raises(NotSymmetric):
        gamma(make_at("SSWW", [(1, 3, "L")]))


def test_gamma_inv_of_figure_statistics():
    sym = gamma_inv(FIG6)
    assert is_symmetric_at(sym) and validate_at(sym).ok
    assert sym.size == 20
    assert sym.stats.urr == FIG6.stats.urr == 2
    s = FIG6.stats
    assert sym.stats.noc == s.noc_diag + 2 * s.noc_off == 5


def test_phi_requires_star():
    with pytest.raises(NotStar):
        phi(FIG3)


def test_psi_single_arc():
    tau = make_lp(3, [(1, 3)])
    t = psi(tau)
    assert t == make_at("SSW", [(1, 3, "U")])
    assert t.stats.urr == 2 == tau.os


def test_phib_smallest():
    row = make_atb("S", [])
    col = make_atb("W", [])
    assert phi_b(row).vertices == (1,)
    assert phi_b(col).vertices == (-1,)
    assert psi_b(phi_b(row)) == row
    assert psi_b(phi_b(col)) == col


# --- exhaustive round-trips and statistic contracts -------------------------


def test_alpha_round_trip_and_contracts():
    for n in range(1, 6):
        for t in enumerate_tlt_oracle(n):
            image = alpha(t)
            assert validate_at(image).ok
            assert image.size == n - 1
            assert image.stats.urr == t.stats.left
            assert image.stats.noc == t.stats.noc
            assert alpha_inv(image) == t


def test_alpha_inv_round_trip():
    for n in range(0, 5):
        for t in enumerate_at_oracle(n, "plain"):
            back = alpha_inv(t)
            assert validate_tlt(back).ok
            assert alpha(back) == t


def test_alpha_preserves_symmetry():
    for size in (1, 3, 5, 7):
        for t in enumerate_sym_tlt_oracle(size):
            assert is_symmetric_at(alpha(t))


def test_beta_round_trip_and_contracts():
    for n in range(1, 6):
        for t in enumerate_tlt_oracle(n):
            image = beta(t)
            assert validate_at(image).ok and is_star(image)
            assert image.size == n
            assert image.stats.urr - 1 == t.stats.left
            assert image.stats.noc == t.stats.noc
            assert image.stats.top == t.stats.top
            assert beta_inv(image) == t


def test_beta_inv_round_trip():
    for n in range(1, 6):
        for t in enumerate_at_oracle(n, "star"):
            back = beta_inv(t)
            assert validate_tlt(back).ok
            assert beta(back) == t


def test_gamma_round_trip_and_contracts():
    for size in (0, 2, 4, 6, 8):
        for t in enumerate_at_oracle(size, "symmetric"):
            image = gamma(t)
            assert validate_atb(image).ok
            assert image.size == size // 2
            s, sb = t.stats, image.stats
            assert s.urr == sb.urr
            assert s.noc == sb.noc_diag + 2 * sb.noc_off
            assert gamma_inv(image) == t


def test_gamma_inv_round_trip():
    for n in range(0, 5):
        for t in enumerate_at_oracle(n, "typeB"):
            sym = gamma_inv(t)
            assert validate_at(sym).ok and is_symmetric_at(sym)
            assert gamma(sym) == t


def test_phi_round_trip_and_contracts():
    for n in range(1, 6):
        for t in enumerate_at_oracle(n, "star"):
            tau = phi(t)
            assert psi(tau) == t
            s = t.stats
            assert s.top == tau.one
            assert s.urr == tau.os
            assert t.diagram.col_set == tau.destinations
            assert t.diagram.row_set == frozenset(tau.vertices) - tau.destinations
            unrestricted = t.diagram.row_set - t.rows_with_left
            no_in_arc = {v for v in tau.vertices if v not in tau.pred}
            assert unrestricted == no_in_arc


def test_psi_round_trip():
    for n in range(0, 6):
        for tau in enumerate_lp(n):
            t = psi(tau)
            assert validate_at(t).ok and is_star(t)
            assert phi(t) == tau


def test_phib_round_trip_and_contracts():
    for n in range(0, 5):
        for t in enumerate_at_oracle(n, "typeB"):
            tau = phi_b(t)
            assert psi_b(tau) == t
            assert t.stats.urr == tau.os
            legal = tau.legal_destinations
            cols = {abs(v) for v in tau.vertices if v < 0} | set(legal)
            assert t.sub.col_set == cols
            rows = {v for v in tau.vertices if v > 0 and v not in legal}
            assert t.sub.row_set == rows
            sh = t.shifted
            unrestricted = {
                i for i in sh.all_rows
                if i not in t.rows_with_left
                and not (abs(i) in sh.sub.col_set and abs(i) in t.cols_with_up)
            }
            no_in_arc = {v for v in tau.vertices if v not in tau.pred}
            assert unrestricted == no_in_arc


def test_psib_round_trip():
    for n in range(0, 5):
        for tau in enumerate_lpb(n):
            t = psi_b(tau)
            assert validate_atb(t).ok
            assert phi_b(t) == tau


def test_images_pairwise_distinct():
    for n in range(1, 5):
        images = [alpha(t).sort_key() for t in enumerate_tlt_oracle(n)]
        assert len(set(images)) == len(images)
        images = [psi(tau).sort_key() for tau in enumerate_lp(n)]
        assert len(set(images)) == len(images)
        images = [psi_b(tau).sort_key() for tau in enumerate_lpb(n)]
        assert len(set(images)) == len(images)
