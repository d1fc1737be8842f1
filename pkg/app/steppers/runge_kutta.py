from app.core.operations import ScaleSum2, ScaleSum5
from app.steppers.base import Stepper, System


class RungeKutta4(Stepper):
    """Classical fourth-order Runge-Kutta.

    Stage states are formed with for_each3 + ScaleSum2 and the final combination
    x + h/6 k1 + h/3 k2 + h/3 k3 + h/6 k4 with a single for_each6 + ScaleSum5, so a
    step makes four RHS evaluations and four algebra passes.
    """

    order = 4

    def do_step(self, system: System, x, t: float, dt: float) -> None:
        self._check_dt(dt)
        k1 = self._buffer("k1", x)
        k2 = self._buffer("k2", x)
        k3 = self._buffer("k3", x)
        k4 = self._buffer("k4", x)
        x_tmp = self._buffer("x_tmp", x)
        half = 0.5 * dt

        system(x, k1, t)
        self._check_rhs(k1, "k1")
        self.algebra.for_each3(x_tmp, x, k1, ScaleSum2(1.0, half))

        system(x_tmp, k2, t + half)
        self._check_rhs(k2, "k2")
        self.algebra.for_each3(x_tmp, x, k2, ScaleSum2(1.0, half))

        system(x_tmp, k3, t + half)
        self._check_rhs(k3, "k3")
        self.algebra.for_each3(x_tmp, x, k3, ScaleSum2(1.0, dt))

        system(x_tmp, k4, t + dt)
        self._check_rhs(k4, "k4")
        self.algebra.for_each6(
            x, x, k1, k2, k3, k4, ScaleSum5(1.0, dt / 6.0, dt / 3.0, dt / 3.0, dt / 6.0)
        )


def rk4_step(system: System, x, t: float, dt: float, algebra=None) -> None:
    RungeKutta4(algebra).do_step(system, x, t, dt)
