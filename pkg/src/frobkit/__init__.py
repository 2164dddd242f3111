"""frobkit: flat structures of rational potentials, numerically certified.

Builds the residue-pairing metric, structure constants, canonical
coordinates, Lame and rotation coefficients of rational potentials
W(z) = z^(n+1)/(n+1) + ... + v_m/(m (z-pole)^m), and checks the
identities these objects satisfy: associativity, quasi-homogeneity,
flatness/closure of the rotation coefficients, the top-system flow of
the omega components, the tau-function gradient, and the algebraic
Painleve VI solutions tied to the bundled three-coordinate models.
"""

from .algebra import PolynomialC, from_roots, order_roots, roots_all
from .canonical import (CanonicalFrame, DarbouxEgoroffResiduals, OmegaSpectrum,
                        RotationData, canonical_frame,
                        darboux_egoroff_residuals, newton_flat_point,
                        omega_and_spectrum, rotation_coefficients,
                        tau_gradient_check)
from .errors import (BranchError, CoordinateChartError,
                     DegenerateConfigurationError, FrobkitError,
                     RootFindingError, UnsupportedPotentialError)
from .eulertop import (TopCurveMatch, TopIntegration, casimir, integrate_rk4,
                       parametric_residual, top_rhs)
from .frobenius import (FlatPoint, RationalPotential, build_potential,
                        critical_data, expected_metric, flat_degrees,
                        flat_metric, prepotential_degree, structure_constants,
                        unit_slot, wdvv_residual)
from .kernels import backend_name
from .models import (MODEL_IDS, Nm02Data, Nm11Data, get_model, generic_suite,
                     nm02_closed_forms, nm02_omega_checks, nm11_closed_forms,
                     nm11_log_tau, prepotential_checks, verification_suite)
from .painleve import (PViSolution, hitchin_solution, omtoy_check, omtoy_rhs,
                       parametric_pvi_residual, pvi_residual)
from .report import VerificationReport, reports_to_csv, reports_to_json

__version__ = "0.1.0"

__all__ = [
    "PolynomialC", "from_roots", "order_roots", "roots_all",
    "CanonicalFrame", "DarbouxEgoroffResiduals", "OmegaSpectrum",
    "RotationData", "canonical_frame", "darboux_egoroff_residuals",
    "newton_flat_point", "omega_and_spectrum", "rotation_coefficients",
    "tau_gradient_check",
    "BranchError", "CoordinateChartError", "DegenerateConfigurationError",
    "FrobkitError", "RootFindingError", "UnsupportedPotentialError",
    "TopCurveMatch", "TopIntegration", "casimir", "integrate_rk4",
    "parametric_residual", "top_rhs",
    "FlatPoint", "RationalPotential", "build_potential", "critical_data",
    "expected_metric", "flat_degrees", "flat_metric", "prepotential_degree",
    "structure_constants", "unit_slot", "wdvv_residual",
    "backend_name",
    "MODEL_IDS", "Nm02Data", "Nm11Data", "get_model", "generic_suite",
    "nm02_closed_forms", "nm02_omega_checks", "nm11_closed_forms",
    "nm11_log_tau", "prepotential_checks", "verification_suite",
    "PViSolution", "hitchin_solution", "omtoy_check", "omtoy_rhs",
    "parametric_pvi_residual", "pvi_residual",
    "VerificationReport", "reports_to_csv", "reports_to_json",
    "__version__",
]
