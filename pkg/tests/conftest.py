import numpy as np
import pytest

from niafs.data.dataset import Dataset
from niafs.rng import RngStream


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record the verdict line of one acceptance criterion; echoed in the terminal summary."""
    def record(label, passed, detail):
        line = f"{label} {'PASS' if passed else 'FAIL'}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[0].split("-")[1])):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return RngStream(12345)


def make_dataset(X, y, names=None):
    return Dataset(np.asarray(X, dtype=float), np.asarray(y), names)


def two_clusters(n=200, d=2, seed=0):
    """Linearly separable clusters with margin >= 1 before scaling."""
    g = np.random.default_rng(seed)
    y = np.arange(n) % 2
    X = g.random((n, d))
    X[:, 0] += np.where(y == 1, 2.0, 0.0)
    return X, y


STUDENT_COLUMNS = (
    "school", "sex", "age", "address", "famsize", "Pstatus", "Medu", "Fedu", "Mjob", "Fjob", "reason",
    "guardian", "traveltime", "studytime", "failures", "schoolsup", "famsup", "paid", "activities",
    "nursery", "higher", "internet", "romantic", "famrel", "freetime", "goout", "Dalc", "Walc", "health",
    "absences", "G1", "G2", "G3",
)


def write_student_like(path, n=60, seed=0):
    """A semicolon-separated file with the 33-column student-performance layout
    (values are random; only the format matches). Returns the G3 column."""
    g = np.random.default_rng(seed)
    choices = {
        "school": ("GP", "MS"), "sex": ("F", "M"), "address": ("U", "R"), "famsize": ("GT3", "LE3"),
        "Pstatus": ("T", "A"), "Mjob": ("at_home", "health", "other", "services", "teacher"),
        "Fjob": ("teacher", "other", "services", "health", "at_home"),
        "reason": ("course", "home", "reputation", "other"), "guardian": ("mother", "father", "other"),
    }
    yes_no = ("schoolsup", "famsup", "paid", "activities", "nursery", "higher", "internet", "romantic")
    rows, g3 = [], []
    for _ in range(n):
        g1 = int(g.integers(0, 21))
        g2 = int(np.clip(g1 + g.integers(-2, 3), 0, 20))
        final = int(np.clip(g2 + g.integers(-2, 3), 0, 20))
        row = {}
        for c in STUDENT_COLUMNS:
            if c in choices:
                row[c] = f'"{choices[c][g.integers(len(choices[c]))]}"'
            elif c in yes_no:
                row[c] = f'"{("yes", "no")[g.integers(2)]}"'
            else:
                row[c] = str(int(g.integers(1, 6)))
        row.update(age=str(int(g.integers(15, 23))), absences=str(int(g.integers(0, 30))),
                   G1=str(g1), G2=str(g2), G3=str(final))
        rows.append(";".join(row[c] for c in STUDENT_COLUMNS))
        g3.append(final)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(";".join(STUDENT_COLUMNS) + "\n" + "\n".join(rows) + "\n")
    return np.array(g3)
