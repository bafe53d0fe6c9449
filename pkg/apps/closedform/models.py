from dataclasses import dataclass


@dataclass(frozen=True)
class ExampleOracle:
    """Константы примера с замкнутой формой в опубликованной точности.

    Положительный режим: v = C1 (x-1) e^(2/x) + C2 (x+1);
    отрицательный: v = C3 x^(-3) + C4 x^2.
    """

    gamma: float = 0.8
    mu_minus: float = 1 / 30
    sigma2_minus: float = 1 / 30
    r: float = 0.1
    c: float = 0.1
    L: float = 1.0
    H: float = 2.0
    A: float = 20 / 7
    B_star: float = 3.839282
    m_star: float = 1.775502
    a_star: float = 1.1632
    b_star: float = 2.1686
    seller_pos: tuple = (0.1075171, 0.5)
    seller_neg: tuple = (2.126333, 0.3816175)
    buyer_pos: tuple = (0.0408, 0.0138)
    buyer_tail: float = 0.1858
    # опубликованный коэффициент; противоречит v_p(H, -) = g(H, +), см. oracle
    buyer_neg: float = 0.0277


EXAMPLE = ExampleOracle()
