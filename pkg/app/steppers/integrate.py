from app.steppers.base import Observer, Stepper
from app.utils.errors import IntegrationError


def integrate_n_steps(
    stepper: Stepper,
    system,
    state,
    t0: float,
    dt: float,
    n: int,
    observer: Observer | None = None,
) -> float:
    """Apply ``stepper`` ``n`` times starting at ``t0`` and return ``t0 + n * dt``.

    ``observer(state, t)`` is called after every step. Any exception from a step or
    from the observer is re-raised as IntegrationError carrying the zero-based step
    index and the step's start time; MemoryError passes through unchanged.
    """
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")

    for step in range(n):
        t = t0 + step * dt
        try:
            stepper.do_step(system, state, t, dt)
            if observer is not None:
                observer(state, t0 + (step + 1) * dt)
                # the observer may have written to the state
                stepper.invalidate()
        except MemoryError:
            raise
        except Exception as e:
            raise IntegrationError(f"step {step} rejected: {e}", step_index=step, t=t) from e
    return t0 + n * dt
