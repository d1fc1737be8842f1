from app.steppers.base import HamiltonianSystem, Stepper, System
from app.steppers.euler import Euler, euler_step
from app.steppers.integrate import integrate_n_steps
from app.steppers.runge_kutta import RungeKutta4, rk4_step
from app.steppers.symplectic import (
    SymplecticEuler,
    SymplecticStepper,
    VelocityVerlet,
    Yoshida4,
    verlet_step,
)
from app.utils.errors import ConfigError

FIRST_ORDER_STEPPERS = {"euler": Euler, "rk4": RungeKutta4}
SYMPLECTIC_STEPPERS = {
    "symplectic-euler": SymplecticEuler,
    "verlet": VelocityVerlet,
    "yoshida4": Yoshida4,
}
STEPPERS = {**FIRST_ORDER_STEPPERS, **SYMPLECTIC_STEPPERS}


def make_stepper(name: str, algebra=None) -> Stepper:
    try:
        return STEPPERS[name](algebra)
    except KeyError:
        raise ConfigError(
            f"unknown stepper {name!r}; expected one of {', '.join(STEPPERS)}"
        ) from None


__all__ = [
    "Euler",
    "FIRST_ORDER_STEPPERS",
    "HamiltonianSystem",
    "RungeKutta4",
    "STEPPERS",
    "SYMPLECTIC_STEPPERS",
    "Stepper",
    "SymplecticEuler",
    "SymplecticStepper",
    "System",
    "VelocityVerlet",
    "Yoshida4",
    "euler_step",
    "integrate_n_steps",
    "make_stepper",
    "rk4_step",
    "verlet_step",
]
