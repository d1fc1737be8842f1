from app.core.operations import ScaleSum2
from app.steppers.base import Stepper, System


class Euler(Stepper):
    """Explicit Euler: x <- x + dt * f(x, t)."""

    order = 1

    def do_step(self, system: System, x, t: float, dt: float) -> None:
        self._check_dt(dt)
        dxdt = self._buffer("dxdt", x)
        system(x, dxdt, t)
        self._check_rhs(dxdt, "euler")
        self.algebra.for_each3(x, x, dxdt, ScaleSum2(1.0, dt))


def euler_step(system: System, x, t: float, dt: float, algebra=None) -> None:
    Euler(algebra).do_step(system, x, t, dt)
