"""Tests for the state model.

Test organization:
- TestWireCodec: parse_state_spec / dump_state_spec
- TestValidate: parameter ranges, angle reduction, density-matrix checks
- TestPhotonMoments: mean photon number and factorial moments
- TestFockTruncation: to_fock_matrix, displacement matrices, auto dimension
- TestRandomStates: haar_mixed_state
"""

import math

import numpy as np
import pytest

from cvcomplexity.core.errors import (
    BadParameter,
    DegenerateCat,
    NonPhysical,
    SpecParseError,
    TruncationTooSevere,
    Unsupported,
)
from cvcomplexity.core.states import (
    auto_dimension,
    cat_norm_squared,
    displacement_matrix,
    dump_state_spec,
    haar_mixed_state,
    is_pure_family,
    mean_photon,
    number_moments,
    parse_state_spec,
    to_fock_matrix,
    vacuum_population,
    validate,
)
from cvcomplexity.core.types import (
    Cat,
    Coherent,
    CoherentMixture,
    Fock,
    FockMatrix,
    Gaussian,
    PhaseAveragedCoherent,
    PhotonAddedCoherent,
    PhotonAddedThermal,
    Thermal,
)

ALL_FAMILIES = [
    Coherent(beta=1 - 0.5j),
    Thermal(nbar=0.7),
    Fock(k=3),
    Gaussian(nbar=0.2, r=0.4, theta=1.0, xi=0.5 + 0.25j),
    PhotonAddedThermal(k=2, nbar=0.5),
    PhotonAddedCoherent(beta=0.8j),
    Cat(beta=1.2, phi=math.pi / 2),
    CoherentMixture(beta=-0.6 + 0.1j),
    PhaseAveragedCoherent(beta_mod=1.5),
    FockMatrix(dim=2, re=[[0.75, 0.0], [0.0, 0.25]], im=[[0.0, 0.1], [-0.1, 0.0]]),
]


# =============================================================================
# TestWireCodec
# =============================================================================


class TestWireCodec:
    """Tests for the JSON wire form of state descriptions."""

    @pytest.mark.parametrize("spec", ALL_FAMILIES, ids=lambda s: s.family)
    def test_dump_then_parse_reproduces_spec(self, spec):
        """Every family survives the wire form unchanged."""
        assert parse_state_spec(dump_state_spec(spec)) == spec

    def test_complex_serialized_as_re_im(self):
        """Complex amplitudes are written as {"re", "im"} objects."""
        wire = dump_state_spec(Coherent(beta=1 + 2j))
        assert wire == {"family": "coherent", "params": {"beta": {"re": 1.0, "im": 2.0}}}

    def test_parse_from_json_text(self):
        """A JSON document with a pair amplitude is accepted."""
        spec = parse_state_spec('{"family": "cat", "params": {"beta": [1, -1], "phi": 0}}')
        assert spec == Cat(beta=1 - 1j, phi=0.0)

    def test_parse_real_amplitude(self):
        """A bare real number is a valid amplitude."""
        assert parse_state_spec({"family": "coherent", "params": {"beta": 2}}).beta == 2 + 0j

    def test_malformed_json(self):
        """Invalid JSON raises SpecParseError."""
        with pytest.raises(SpecParseError, match="not valid JSON"):
            parse_state_spec("{family: coherent")

    def test_missing_family(self):
        """A payload without a family is rejected."""
        with pytest.raises(SpecParseError, match="family"):
            parse_state_spec({"params": {"nbar": 1.0}})

    def test_unknown_family(self):
        """Unknown family names are rejected."""
        with pytest.raises(SpecParseError):
            parse_state_spec({"family": "squeezed_cat", "params": {}})

    def test_missing_parameter(self):
        """A missing required parameter is rejected."""
        with pytest.raises(SpecParseError):
            parse_state_spec({"family": "fock", "params": {}})

    def test_params_must_be_object(self):
        with pytest.raises(SpecParseError, match="params"):
            parse_state_spec({"family": "fock", "params": [3]})


# =============================================================================
# TestValidate
# =============================================================================


class TestValidate:
    """Tests for validate()."""

    def test_theta_reduced(self):
        """Squeezing angle is reduced to [0, 2 pi)."""
        checked = validate(Gaussian(r=0.5, theta=2 * math.pi + 0.25))
        assert checked.spec.theta == pytest.approx(0.25)

    def test_phi_reduced(self):
        checked = validate(Cat(beta=1.0, phi=-math.pi / 2))
        assert checked.spec.phi == pytest.approx(3 * math.pi / 2)

    def test_checked_state_passthrough(self):
        """Validating a checked state returns it unchanged."""
        checked = validate(Fock(k=2))
        assert validate(checked) is checked

    @pytest.mark.parametrize(
        "spec",
        [
            Thermal(nbar=-0.1),
            Fock(k=-1),
            Gaussian(r=-0.5),
            Gaussian(nbar=-1.0),
            PhotonAddedThermal(k=0, nbar=1.0),
            PhaseAveragedCoherent(beta_mod=-1.0),
            Coherent(beta=complex(math.inf, 0.0)),
        ],
    )
    def test_out_of_range_parameters(self, spec):
        """Out-of-range parameters raise BadParameter."""
        with pytest.raises(BadParameter):
            validate(spec)

    def test_degenerate_odd_cat(self):
        """The odd cat at beta = 0 has no normalization."""
        with pytest.raises(DegenerateCat):
            validate(Cat(beta=0.0, phi=math.pi))

    @pytest.mark.parametrize("beta", [1e-5, 1e-7, 1e-12])
    def test_small_odd_cat_is_valid(self, beta):
        """Only an exactly vanishing norm is degenerate."""
        spec = Cat(beta=beta, phi=math.pi)
        assert validate(spec).family == "cat"
        assert cat_norm_squared(beta, math.pi) == pytest.approx(4.0 * beta * beta, rel=1e-9)
        assert mean_photon(spec) == pytest.approx(1.0, rel=1e-9)
        assert vacuum_population(spec) == 0.0

    def test_even_cat_at_zero_is_vacuum(self):
        """The even cat at beta = 0 is a valid state."""
        assert validate(Cat(beta=0.0, phi=0.0)).family == "cat"

    def test_fock_matrix_trace(self):
        """A density matrix with the wrong trace is not physical."""
        with pytest.raises(NonPhysical, match="trace"):
            validate(FockMatrix(dim=2, re=[[0.5, 0.0], [0.0, 0.4]]))

    def test_fock_matrix_negative_eigenvalue(self):
        """A unit-trace matrix with a negative eigenvalue is not physical."""
        with pytest.raises(NonPhysical, match="negative eigenvalue"):
            validate(FockMatrix(dim=2, re=[[0.5, 0.8], [0.8, 0.5]]))

    def test_fock_matrix_shape(self):
        with pytest.raises(BadParameter):
            validate(FockMatrix(dim=3, re=[[1.0, 0.0], [0.0, 0.0]]))

    def test_fock_matrix_hermitized_and_renormalized(self):
        """Small asymmetries are symmetrized and the trace is set to 1."""
        spec = FockMatrix(dim=2, re=[[0.6 + 5e-9, 0.1], [0.1 + 2e-12, 0.4]])
        checked = validate(spec)
        rho = checked.rho
        assert np.allclose(rho, rho.conj().T, atol=0.0)
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-15)


# =============================================================================
# TestPhotonMoments
# =============================================================================


class TestPhotonMoments:
    """Tests for mean_photon and number_moments."""

    def test_photon_added_coherent_mean(self):
        beta = 1.3
        mu = beta**2
        expected = (mu * mu + 3 * mu + 1) / (1 + mu)
        assert mean_photon(PhotonAddedCoherent(beta=beta)) == pytest.approx(expected)

    def test_photon_added_thermal_mean(self):
        assert mean_photon(PhotonAddedThermal(k=2, nbar=0.5)) == pytest.approx(3.5)

    def test_squeezed_vacuum_mean(self):
        assert mean_photon(Gaussian(r=1.0)) == pytest.approx(math.sinh(1.0) ** 2)

    @pytest.mark.parametrize(
        "spec",
        [
            Thermal(nbar=1.5),
            PhotonAddedThermal(k=2, nbar=0.8),
            PhotonAddedCoherent(beta=0.9 + 0.3j),
            Cat(beta=1.1, phi=1.0),
            CoherentMixture(beta=0.7),
            PhaseAveragedCoherent(beta_mod=1.2),
            Gaussian(nbar=0.4, xi=1 - 0.5j),
        ],
        ids=lambda s: s.family,
    )
    def test_closed_forms_match_truncated_matrix(self, spec):
        """Family moments agree with the moments of the truncated matrix."""
        truncated = to_fock_matrix(spec).matrix
        expected = number_moments(truncated)
        assert number_moments(spec) == pytest.approx(expected, rel=1e-7, abs=1e-9)

    def test_vacuum_population(self):
        assert vacuum_population(Thermal(nbar=1.0)) == pytest.approx(0.5)
        assert vacuum_population(Cat(beta=1.0, phi=math.pi)) == pytest.approx(0.0, abs=1e-15)
        assert vacuum_population(PhotonAddedCoherent(beta=1.0)) == 0.0
        assert vacuum_population(Coherent(beta=1.0)) == pytest.approx(math.exp(-1.0))

    def test_pure_families(self):
        assert is_pure_family(Cat(beta=1.0))
        assert is_pure_family(Gaussian(r=0.5))
        assert not is_pure_family(Gaussian(nbar=0.1))
        assert not is_pure_family(Thermal(nbar=0.0))


# =============================================================================
# TestFockTruncation
# =============================================================================


class TestFockTruncation:
    """Tests for the number-basis representation."""

    def test_auto_dimension_reaches_tolerance(self):
        """Automatic truncation keeps 1 - trunc_tol of the trace."""
        truncated = to_fock_matrix(Thermal(nbar=5.0), trunc_tol=1e-10)
        assert truncated.retained_trace >= 1 - 1e-10
        assert truncated.dim >= auto_dimension(Thermal(nbar=5.0))

    def test_fixed_dimension_too_small(self):
        """An explicit dimension that loses too much raises."""
        with pytest.raises(TruncationTooSevere):
            to_fock_matrix(Coherent(beta=3.0), dim=4)

    def test_squeezed_states_not_truncated(self):
        with pytest.raises(Unsupported):
            to_fock_matrix(Gaussian(r=0.3))

    def test_displaced_vacuum_is_coherent(self):
        """The displaced-thermal path at nbar = 0 reproduces the coherent state."""
        beta = 1.0 + 0.5j
        displaced = to_fock_matrix(Gaussian(xi=beta), dim=30).matrix.matrix
        coherent = to_fock_matrix(Coherent(beta=beta), dim=30).matrix.matrix
        assert np.allclose(displaced, coherent, atol=1e-12)

    def test_displacement_matrix_unitary_block(self):
        """Low-lying columns of D(xi) are orthonormal."""
        d = displacement_matrix(0.8 - 0.6j, 80)
        block = d[:, :20]
        assert np.allclose(block.conj().T @ block, np.eye(20), atol=1e-10)

    def test_fock_state_matrix(self):
        truncated = to_fock_matrix(Fock(k=3))
        rho = truncated.matrix.matrix
        assert rho[3, 3] == 1.0
        assert truncated.retained_trace == 1.0

    def test_cat_matrix_is_pure(self):
        rho = to_fock_matrix(Cat(beta=1.5, phi=math.pi / 3)).matrix.matrix
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-9)
        assert np.trace(rho @ rho).real == pytest.approx(1.0, abs=1e-9)

    def test_odd_cat_has_odd_parity(self):
        rho = to_fock_matrix(Cat(beta=1.0, phi=math.pi)).matrix.matrix
        assert np.allclose(np.diag(rho)[::2], 0.0, atol=1e-15)

    def test_mixture_keeps_parity_blocks(self):
        rho = to_fock_matrix(CoherentMixture(beta=1.0)).matrix.matrix
        assert rho[0, 1] == 0.0
        assert abs(rho[0, 2]) > 0.0


# =============================================================================
# TestRandomStates
# =============================================================================


class TestRandomStates:
    """Tests for haar_mixed_state()."""

    def test_valid_density_matrix(self):
        spec = haar_mixed_state(6, rng=np.random.default_rng(3))
        checked = validate(spec)
        assert np.linalg.eigvalsh(checked.rho).min() > -1e-12

    def test_seeded_generation_is_reproducible(self):
        a = haar_mixed_state(5, rank=2, rng=np.random.default_rng(11))
        b = haar_mixed_state(5, rank=2, rng=np.random.default_rng(11))
        assert a == b

    def test_rank(self):
        spec = haar_mixed_state(6, rank=2, rng=np.random.default_rng(0))
        eigenvalues = np.linalg.eigvalsh(spec.matrix)
        assert int(np.sum(eigenvalues > 1e-12)) == 2

    def test_bad_dimension(self):
        with pytest.raises(BadParameter):
            haar_mixed_state(0)
