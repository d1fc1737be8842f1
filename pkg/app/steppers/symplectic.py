"""Symplectic Runge-Kutta-Nystrom steppers for separable Hamiltonians.

The state is a ``(q, p)`` pair and the system supplies only the momentum
derivative ``dp = F(q)``; ``dq/dt = p`` is built in. All variants update ``q``
and ``p`` in place through the bound algebra.
"""

from app.core.operations import ScaleSum2
from app.core.state import check_same_shape
from app.steppers.base import HamiltonianSystem, Stepper


class SymplecticStepper(Stepper):
    def _force(self, system: HamiltonianSystem, q, dp) -> None:
        system(q, dp)
        self._check_rhs(dp, "force")

    def _unpack(self, state):
        q, p = state
        check_same_shape(q, p)
        return q, p


class SymplecticEuler(SymplecticStepper):
    """p <- p + dt F(q); q <- q + dt p."""

    order = 1

    def do_step(self, system: HamiltonianSystem, state, t: float, dt: float) -> None:
        self._check_dt(dt)
        q, p = self._unpack(state)
        dp = self._buffer("dp", q)
        self._force(system, q, dp)
        self.algebra.for_each3(p, p, dp, ScaleSum2(1.0, dt))
        self.algebra.for_each3(q, q, p, ScaleSum2(1.0, dt))


class VelocityVerlet(SymplecticStepper):
    """Stormer-Verlet in kick-drift-kick form, second order.

    With ``reuse_force`` the force from the end of a step is reused as the first
    force of the next step, saving one evaluation per step. A caller that modifies
    ``q`` between steps must call ``invalidate`` first; integrate_n_steps does so after
    every observer call.
    """

    order = 2

    def __init__(self, algebra=None, validate=None, reuse_force: bool = False):
        super().__init__(algebra, validate)
        self.reuse_force = reuse_force
        self._force_for = None

    def poison_scratch(self) -> None:
        super().poison_scratch()
        self.invalidate()

    def invalidate(self) -> None:
        self._force_for = None

    def do_step(self, system: HamiltonianSystem, state, t: float, dt: float) -> None:
        self._check_dt(dt)
        q, p = self._unpack(state)
        dp = self._buffer("dp", q)
        half = 0.5 * dt

        if not (self.reuse_force and self._force_for is q):
            self._force(system, q, dp)
        self.algebra.for_each3(p, p, dp, ScaleSum2(1.0, half))
        self.algebra.for_each3(q, q, p, ScaleSum2(1.0, dt))
        self._force(system, q, dp)
        self.algebra.for_each3(p, p, dp, ScaleSum2(1.0, half))
        self._force_for = q if self.reuse_force else None


# Triple-jump weights lifting a symmetric second-order scheme to fourth order
_CBRT2 = 2.0 ** (1.0 / 3.0)
YOSHIDA_W1 = 1.0 / (2.0 - _CBRT2)
YOSHIDA_W0 = -_CBRT2 / (2.0 - _CBRT2)


class Yoshida4(VelocityVerlet):
    """Fourth order: Verlet sub-steps of w1*dt, w0*dt, w1*dt."""

    order = 4

    def do_step(self, system: HamiltonianSystem, state, t: float, dt: float) -> None:
        self._check_dt(dt)
        for w in (YOSHIDA_W1, YOSHIDA_W0, YOSHIDA_W1):
            super().do_step(system, state, t, w * dt)


def verlet_step(system: HamiltonianSystem, q, p, dt: float, algebra=None) -> None:
    VelocityVerlet(algebra).do_step(system, (q, p), 0.0, dt)
