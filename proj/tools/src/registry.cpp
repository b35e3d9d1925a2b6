#include "sfw_cli/registry.hpp"

namespace sfw::cli {

const std::string& builtin_config() {
  static const std::string doc = R"json({
  "schema": "sfw-config/1",
  "scenarios": [
    {
      "name": "classical_reilly_disk",
      "description": "Euclidean unit disk, manufactured f, V = 1, K = 0",
      "claim": "classical Reilly formula",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0}},
      "suites": ["classical_reilly"],
      "levels": [2, 3, 4],
      "field": {"f": {"expression": "sin(x1)*exp(0.5*x2) + x1^2*x2"}, "V": "potential"}
    },
    {
      "name": "reilly_hyperbolic_perturbed",
      "description": "Hyperbolic perturbed ball, V = cosh r, K = -1, f solves Lap f = 2 f, f = 1",
      "claim": "weighted Reilly identity (hyperbolic)",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.15], "scale_by_geodesic_radius": 0.7}},
      "suites": ["reilly"],
      "levels": [2, 3, 4],
      "field": {"f": {"problem": "weighted_hk", "boundary_value": 1.0}, "V": "potential", "K": -1.0}
    },
    {
      "name": "reilly_spherical_perturbed",
      "description": "Spherical perturbed cap, V = cos r, K = 1, f solves Lap f + 2 f = 1, f = 0",
      "claim": "weighted Reilly identity (spherical)",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.1], "scale_by_geodesic_radius": 0.5}},
      "suites": ["reilly"],
      "levels": [2, 3, 4],
      "field": {"f": {"problem": "cmc"}, "V": "potential", "K": 1.0}
    },
    {
      "name": "reilly_custom_random",
      "description": "Conformal metric phi = 0.1(x1^2 - x2^2), random cubic f and V, K = 0.3",
      "claim": "weighted Reilly identity (arbitrary V, f, K)",
      "model": {"kind": "custom", "log_factor_polynomial": [
        {"exponents": [2, 0], "coefficient": 0.1},
        {"exponents": [0, 2], "coefficient": -0.1}]},
      "domain": {"profile": {"type": "fourier", "a0": 0.5, "cos": [0.0, 0.1]}},
      "suites": ["reilly"],
      "levels": [2, 3, 4],
      "field": {"f": {"random": {"degree": 3, "seed": 7}},
                "V": {"random": {"degree": 3, "seed": 8, "offset": 1.5, "amplitude": 0.3}},
                "K": 0.3}
    },
    {
      "name": "hk_euclidean_disk",
      "description": "Euclidean unit disk: int 1/H = n Vol",
      "claim": "Heintze-Karcher equality (euclidean ball)",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "hk_mode": "equality"
    },
    {
      "name": "hk_hyperbolic_ball",
      "description": "Hyperbolic geodesic ball R = 0.7: both sides 2 pi sinh^2 0.7",
      "claim": "weighted Heintze-Karcher equality (geodesic ball)",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "geodesic_ball", "radius": 0.7}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "hk_mode": "equality"
    },
    {
      "name": "hk_euclidean_ellipse",
      "description": "Euclidean ellipse (1, 0.8): strict gap 0.3817",
      "claim": "Heintze-Karcher strict inequality (euclidean)",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "ellipse", "a": 1.0, "b": 0.8}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "hk_mode": "strict"
    },
    {
      "name": "hk_hyperbolic_perturbed",
      "description": "Hyperbolic perturbed ball tanh(0.35)(1 + 0.15 cos 2t): strict gap 0.4420",
      "claim": "weighted Heintze-Karcher strict inequality",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.15], "scale_by_geodesic_radius": 0.7}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "hk_mode": "strict"
    },
    {
      "name": "hk_nonconvex_guard",
      "description": "Euclidean trefoil-like profile with H < 0 somewhere: no inequality claim",
      "claim": "mean-convexity hypothesis guard",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "fourier", "a0": 0.5, "cos": [0.0, 0.0, 0.2]}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "expect": "inconclusive"
    },
    {
      "name": "hk_custom_poincare",
      "description": "Custom factor ln(2/(1 - |x|^2)) on a ball, V = cosh of the fast-marching distance",
      "claim": "conformal-metric Heintze-Karcher inequality with curvature screen",
      "model": {"kind": "custom", "log_factor": "log(2/(1 - r2))"},
      "domain": {"profile": {"type": "fourier", "a0": 0.3364, "cos": [0.0, 0.03]}},
      "suites": ["hk"],
      "levels": [2, 3, 4],
      "hk_mode": "inequality"
    },
    {
      "name": "brendle_spherical_ball",
      "description": "Spherical geodesic ball R = 0.5: both sides 2 pi sin^2 0.5",
      "claim": "cos r / H inequality, equality case",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "geodesic_ball", "radius": 0.5}},
      "suites": ["brendle"],
      "levels": [2, 3, 4],
      "hk_mode": "equality"
    },
    {
      "name": "brendle_spherical_perturbed",
      "description": "Spherical cap tan(0.25)(1 + 0.1 cos 2t): strict gap 0.1388",
      "claim": "cos r / H strict inequality",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.1], "scale_by_geodesic_radius": 0.5}},
      "suites": ["brendle"],
      "levels": [2, 3, 4],
      "hk_mode": "strict"
    },
    {
      "name": "brendle_spherical_cos3",
      "description": "Spherical cap tan(0.25)(1 + 0.1 cos 3t): not mean-convex, precondition violated",
      "claim": "cos r / H inequality hypothesis guard",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.0, 0.1], "scale_by_geodesic_radius": 0.5}},
      "suites": ["brendle"],
      "levels": [2, 3, 4],
      "expect": "inconclusive"
    },
    {
      "name": "minkowski_euclidean_ellipse",
      "description": "Both Minkowski pairs on a euclidean ellipse",
      "claim": "Minkowski formulas (euclidean)",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "ellipse", "a": 1.0, "b": 0.8}},
      "suites": ["minkowski"],
      "levels": [2, 3, 4]
    },
    {
      "name": "minkowski_hyperbolic_perturbed",
      "description": "Both Minkowski pairs on a hyperbolic ellipse-like domain",
      "claim": "Minkowski formulas (hyperbolic)",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.15], "scale_by_geodesic_radius": 0.7}},
      "suites": ["minkowski"],
      "levels": [2, 3, 4]
    },
    {
      "name": "minkowski_spherical_perturbed",
      "description": "Both Minkowski pairs on a three-lobed spherical cap",
      "claim": "Minkowski formulas (spherical)",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.0, 0.1], "scale_by_geodesic_radius": 0.5}},
      "suites": ["minkowski"],
      "levels": [2, 3, 4]
    },
    {
      "name": "alexandrov_hyperbolic_circle",
      "description": "Equality chain on the hyperbolic geodesic circle R = 0.7",
      "claim": "Alexandrov chain (hyperbolic)",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "geodesic_ball", "radius": 0.7}},
      "suites": ["alexandrov"],
      "levels": [2, 3, 4]
    },
    {
      "name": "alexandrov_spherical_circle",
      "description": "Equality chain on the spherical geodesic circle R = 0.5",
      "claim": "Alexandrov chain (spherical)",
      "model": {"kind": "spherical"},
      "domain": {"profile": {"type": "geodesic_ball", "radius": 0.5}},
      "suites": ["alexandrov"],
      "levels": [2, 3, 4]
    },
    {
      "name": "alexandrov_euclidean_circle",
      "description": "Equality chain on the euclidean unit circle (K = 0)",
      "claim": "Alexandrov chain (euclidean)",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0}},
      "suites": ["alexandrov"],
      "levels": [2, 3, 4]
    },
    {
      "name": "alexandrov_euclidean_ellipse",
      "description": "Euclidean ellipse fails the CMC screen; chain skipped",
      "claim": "CMC screen",
      "model": {"kind": "euclidean"},
      "domain": {"profile": {"type": "ellipse", "a": 1.0, "b": 0.8}},
      "suites": ["alexandrov"],
      "levels": [2, 3, 4],
      "expect": "inconclusive"
    },
    {
      "name": "rigidity_hyperbolic_ball",
      "description": "Obata residual of Lap f = 2 f, f = 1 on the geodesic ball R = 0.7",
      "claim": "rigidity equality case",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "geodesic_ball", "radius": 0.7}},
      "suites": ["rigidity"],
      "levels": [2, 3, 4],
      "rigidity_mode": "ball"
    },
    {
      "name": "rigidity_hyperbolic_perturbed",
      "description": "Obata residual on the 0.15-perturbed ball stays bounded below",
      "claim": "rigidity discrimination",
      "model": {"kind": "hyperbolic"},
      "domain": {"profile": {"type": "fourier", "a0": 1.0, "cos": [0.0, 0.15], "scale_by_geodesic_radius": 0.7}},
      "suites": ["rigidity"],
      "levels": [2, 3, 4],
      "rigidity_mode": "perturbed"
    },
    {
      "name": "solver_spherical_beyond_hemisphere",
      "description": "Lap f + 2 f = 1 on a cap past the equator: indefinite operator detected",
      "claim": "hemisphere hypothesis of the constant-mean-curvature problem",
      "model": {"kind": "spherical", "chart_radius": 2.0},
      "domain": {"profile": {"type": "fourier", "a0": 1.15}},
      "suites": ["alexandrov"],
      "levels": [2],
      "expect": "solver_failure"
    }
  ]
}
)json";
  return doc;
}

}  // namespace sfw::cli
