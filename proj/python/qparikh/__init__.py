"""q-deformed binomial coefficients of words and q-Parikh matrices.

Words are strings ("0110", "abba", "1[12]3"); polynomials are lists of
integer coefficients, constant term first.
"""

from ._qparikh import (
    QParikhError,
    cancellation_identity,
    cauchy_dual,
    cauchy_minor,
    check_canonical_reduction,
    closed_form_eval,
    coefficient_recurrence,
    growth_fit,
    parikh_inverse,
    parikh_matrix,
    periodic_closed_form,
    qbinom,
    qbinom_oracle,
    recurrence_integer,
    recurrence_polynomial,
    reverse_duality_check,
    run_cli,
    series_coefficients,
    sigma_z,
    subword_count,
    vanishing_residues,
    verify,
)


def evaluate(poly, q):
    """Value of a coefficient list at q."""
    acc = 0
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def main(argv=None):
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
