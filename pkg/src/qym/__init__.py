"""Exact quaternionic exterior calculus on a 4-dimensional double lattice
complex, with self-dual and anti-self-dual gauge field constructions.

All arithmetic is exact (arbitrary-precision rationals), so every algebraic
identity in the test and verification suites is an equality, not an
approximation.
"""

from .scalars import BACKEND, rat
from .quaternion import ComplexRational, Matrix2C, Quaternion, QUNITS, embed
from .chains import (AXES, Cell, Chain, boundary, complement, shift,
                     shuffle_sign, star_chain)
from .forms import (DegreeError, DiscreteForm, RuleForm,
                    SingularCoefficientError, TableForm, Window, WindowError,
                    coboundary, conjugate_form, constant_form, cup,
                    form_inverse, imaginary_part, iota, pair, star_form,
                    unit_zero_form, zero_form)
from .gauge import (Connection, Curvature, DualityReport, GaugeTransform,
                    covariant_differential, curvature, curvature_form,
                    duality_classify, field_strength_component,
                    gauge_transform, generated_curvature, su2_residuals,
                    ym_residuals)
from .solutions import (asymptotic_gauge_check, build_anti_instanton,
                        build_connection, build_instanton,
                        closed_field_strength, coordinate_form,
                        diagonal_curvature_form, diagonal_field_strength,
                        diagonal_weight, flat_connection, frame_form,
                        conjugate_frame_form, generator_form, link_weight,
                        omega_form, pure_gauge_connection, pure_gauge_form,
                        shell_max_deviation)

__version__ = "0.1.0"
