import os

from hypothesis import HealthCheck, settings

from kacres.diagrams import WeightDiagram
from kacres.moves import AllowableFunction

# Default profile runs every law at >= 1000 cases; set HYPOTHESIS_PROFILE=dev
# for quick local iteration.
settings.register_profile(
    "laws",
    settings(
        max_examples=1000,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
    ),
)
settings.register_profile(
    "dev",
    settings(
        max_examples=50,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
    ),
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "laws"))


D = WeightDiagram.of

# One line per acceptance criterion, printed uncaptured at session end.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def func(source, target, pairing, trace=()):
    return AllowableFunction(source=source, target=target, pairing=tuple(pairing), trace=tuple(trace))


# Worked five-dot example: two functions to the same target, degrees 4 and 5.
FIVE_DOT_MU = D(3, 4, 5, 7, 8)
FIVE_DOT_LAM = D(0, 1, 3, 5, 6)
FIVE_DOT_PAIRING_DEG4 = (3, 0, 1, 5, 6)
FIVE_DOT_PAIRING_DEG5 = (0, 1, 5, 3, 6)

# Worked eight-dot example: multiplicity two in degree 8.
EIGHT_DOT_MU = D(0, 1, 2, 3, 8, 9, 10, 11)
EIGHT_DOT_LAM = D(-4, -3, 0, 1, 4, 5, 8, 9)
EIGHT_DOT_PAIRINGS = {(0, 1, -4, -3, 4, 5, 8, 9), (-4, -3, 0, 1, 8, 9, 4, 5)}
