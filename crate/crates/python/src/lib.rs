use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rootlength::length;
use rootlength::monoid::{self, MonoidCtx, SlabRoute, DEFAULT_POINT_CAP};
use rootlength::oracle::{self, DEFAULT_BFS_CAP};
use rootlength::polytope::{self, FacetJson};
use rootlength::vector::{fmt_rational, parse_rational, Rational};
use rootlength::verify::{self, VerifyOptions};
use rootlength::{LatticeVec, WeylWord};

fn err(e: rootlength::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&x.str()?.to_string()).map_err(err)
}

/// Converts 1-based indices to 0-based ones.
fn zero_based(v: &[usize], rank: usize) -> PyResult<Vec<usize>> {
    v.iter()
        .map(|&i| {
            if i == 0 || i > rank {
                Err(PyValueError::new_err(format!("index {i} out of range 1..={rank}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// An irreducible root system, e.g. `RootSystem("B3")`.
#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: rootlength::RootSystem,
}

impl PyRootSystem {
    fn vec(&self, g: Vec<i64>) -> PyResult<LatticeVec> {
        self.inner.check_dim(g.len()).map_err(err)?;
        Ok(LatticeVec(g))
    }
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let t = name.parse().map_err(err)?;
        Ok(PyRootSystem { inner: rootlength::RootSystem::new(t).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    #[getter]
    fn marks(&self) -> Vec<i64> {
        self.inner.marks().to_vec()
    }

    #[getter]
    fn theta(&self) -> Vec<i64> {
        self.inner.theta().0.clone()
    }

    fn roots(&self) -> Vec<Vec<i64>> {
        self.inner.roots().iter().map(|r| r.0.clone()).collect()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(|r| r.0.clone()).collect()
    }

    /// Maximal simple roots, 1-based.
    fn maximal_roots(&self) -> Vec<usize> {
        polytope::maximal_roots(&self.inner).into_iter().map(|i| i + 1).collect()
    }

    /// Root coordinates of the weight with the given weight coordinates.
    fn weight_to_root(&self, c: Vec<i64>) -> PyResult<Vec<i64>> {
        self.inner.check_dim(c.len()).map_err(err)?;
        Ok(self.inner.from_weight_coords(&c).map_err(err)?.0)
    }

    fn weight_coords(&self, g: Vec<i64>) -> PyResult<Vec<i64>> {
        let g = self.vec(g)?;
        Ok(self.inner.weight_coords(&g.0))
    }

    fn is_root(&self, g: Vec<i64>) -> PyResult<bool> {
        Ok(self.inner.is_root(&self.vec(g)?))
    }

    /// Applies the word (1-based letters, rightmost first) to a vector in root coordinates.
    fn act(&self, word: Vec<usize>, g: Vec<i64>) -> PyResult<Vec<i64>> {
        let w = WeylWord(zero_based(&word, self.inner.rank())?);
        Ok(self.inner.act_root(&w, &self.vec(g)?).0)
    }

    fn length(&self, g: Vec<i64>) -> PyResult<i64> {
        length::length_value(&self.inner, &self.vec(g)?).map_err(err)
    }

    fn decompose(&self, g: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        let d = length::decompose(&self.inner, &self.vec(g)?).map_err(err)?;
        Ok(d.into_iter().map(|v| v.0).collect())
    }

    #[pyo3(signature = (g, cap = length::DEFAULT_DP_CAP))]
    fn positive_length(&self, g: Vec<i64>, cap: usize) -> PyResult<i64> {
        length::positive_length(&self.inner, &self.vec(g)?, cap).map_err(err)
    }

    #[pyo3(signature = (g, r_max = oracle::DEFAULT_R_MAX))]
    fn brute_length(&self, g: Vec<i64>, r_max: usize) -> PyResult<usize> {
        oracle::brute_length(&self.inner, &self.vec(g)?, r_max).map_err(err)
    }

    fn brute_positive_length(&self, g: Vec<i64>) -> PyResult<usize> {
        oracle::brute_positive_length(&self.inner, &self.vec(g)?, DEFAULT_BFS_CAP).map_err(err)
    }

    fn horizontal_length(&self, g: Vec<i64>) -> PyResult<i64> {
        length::horizontal_length_type_a(&self.inner, &self.vec(g)?).map_err(err)
    }

    /// Facets as dicts with `alpha`, `tau`, `lambda` ("p/q" strings) and `vertices`.
    fn facets<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let mut out = Vec::new();
        for f in polytope::enumerate_facets(&self.inner).map_err(err)? {
            let j = FacetJson::new(&self.inner, &f);
            let d = PyDict::new(py);
            d.set_item("alpha", j.alpha)?;
            d.set_item("tau", j.tau)?;
            d.set_item("lambda", j.lambda)?;
            d.set_item("vertices", j.vertices.into_iter().map(|v| v.0).collect::<Vec<_>>())?;
            out.push(d);
        }
        Ok(out)
    }

    /// Monoid context of the face `τ F(A)`; `a` and `tau` are 1-based.
    #[pyo3(signature = (a, tau = Vec::new()))]
    fn face(&self, a: Vec<usize>, tau: Vec<usize>) -> PyResult<Face> {
        let l = self.inner.rank();
        let set = rootlength::SimpleSet::from_indices(zero_based(&a, l)?);
        let spec =
            rootlength::FaceSpec::new(&self.inner, set, WeylWord(zero_based(&tau, l)?)).map_err(err)?;
        Ok(Face { inner: MonoidCtx::new(&self.inner, spec).map_err(err)? })
    }

    /// Proper minimal elements of `F(α)`; `method` is "slab", "box", "dominant" or "criterion".
    #[pyo3(signature = (alpha, level_bound = None, method = "slab"))]
    fn proper_generators(
        &self,
        alpha: usize,
        level_bound: Option<&Bound<'_, PyAny>>,
        method: &str,
    ) -> PyResult<Vec<Vec<i64>>> {
        let a = zero_based(&[alpha], self.inner.rank())?[0];
        let bound = match level_bound {
            Some(b) => rational(b)?,
            None => Rational::from_integer(monoid::DEFAULT_LEVEL_BOUND.into()),
        };
        let r = match method {
            "slab" => monoid::proper_generators_slab(&self.inner, a, &bound, None, DEFAULT_POINT_CAP),
            "box" => monoid::proper_generators_slab(&self.inner, a, &bound, Some(SlabRoute::Box), DEFAULT_POINT_CAP),
            "dominant" => {
                monoid::proper_generators_slab(&self.inner, a, &bound, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP)
            }
            "criterion" => monoid::proper_generators_criterion(&self.inner, a),
            _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
        }
        .map_err(err)?;
        Ok(r.generators.into_iter().map(|v| v.0).collect())
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.name())
    }
}

/// The monoids `N(F) ⊆ M(F)` of a face.
#[pyclass(frozen)]
struct Face {
    inner: MonoidCtx,
}

impl Face {
    fn vec(&self, g: Vec<i64>) -> PyResult<LatticeVec> {
        self.inner.root_system().check_dim(g.len()).map_err(err)?;
        Ok(LatticeVec(g))
    }
}

#[pymethods]
impl Face {
    fn roots(&self) -> Vec<Vec<i64>> {
        self.inner.vroots.iter().map(|v| v.0.clone()).collect()
    }

    fn level(&self, g: Vec<i64>) -> PyResult<String> {
        Ok(fmt_rational(&self.inner.level_of(&self.vec(g)?)))
    }

    fn in_cone(&self, g: Vec<i64>) -> PyResult<bool> {
        Ok(self.inner.in_cone(&self.vec(g)?))
    }

    fn in_zspan(&self, g: Vec<i64>) -> PyResult<bool> {
        Ok(self.inner.in_zspan(&self.vec(g)?))
    }

    /// A list of face roots summing to `g`, or None.
    fn in_nspan(&self, g: Vec<i64>) -> PyResult<Option<Vec<Vec<i64>>>> {
        Ok(self.inner.in_nspan(&self.vec(g)?).map(|w| w.into_iter().map(|v| v.0).collect()))
    }

    fn is_proper(&self, g: Vec<i64>) -> PyResult<bool> {
        self.inner.is_proper(&self.vec(g)?).map_err(err)
    }

    #[pyo3(signature = (level_bound = None))]
    fn minimal_elements(&self, level_bound: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<Vec<i64>>> {
        let b = match level_bound {
            Some(b) => rational(b)?,
            None => Rational::from_integer(monoid::DEFAULT_LEVEL_BOUND.into()),
        };
        Ok(self.inner.minimal_elements(&b).map_err(err)?.into_iter().map(|v| v.0).collect())
    }

    /// `(holds, witness)` for normality up to the level bound.
    fn is_normal(&self, level_bound: &Bound<'_, PyAny>) -> PyResult<(bool, Option<Vec<i64>>)> {
        let d = self.inner.is_normal(&rational(level_bound)?, None, DEFAULT_POINT_CAP).map_err(err)?;
        Ok((d.holds, d.witness.map(|v| v.0)))
    }

    fn is_integrally_closed(&self, level_bound: &Bound<'_, PyAny>) -> PyResult<(bool, Option<Vec<i64>>)> {
        let d = self.inner.is_integrally_closed(&rational(level_bound)?, None, DEFAULT_POINT_CAP).map_err(err)?;
        Ok((d.holds, d.witness.map(|v| v.0)))
    }
}

/// (check, status, detail)
type CheckRow = (String, String, String);

/// Runs one verification suite; returns `(passed, [(check, status, detail)])`.
#[pyfunction]
#[pyo3(signature = (suite, max_rank = 4))]
fn verify_suite(suite: &str, max_rank: usize) -> PyResult<(bool, Vec<CheckRow>)> {
    let opts = VerifyOptions { max_rank, ..VerifyOptions::default() };
    let r = verify::run_suite(suite, &opts).map_err(err)?;
    let checks = r
        .checks
        .iter()
        .map(|c| {
            let status = if c.status == verify::Status::Pass { "pass" } else { "fail" };
            (c.name.clone(), status.to_string(), c.detail.clone())
        })
        .collect();
    Ok((r.passed(), checks))
}

#[pymodule]
fn pyrootlength(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<Face>()?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add("SUITES", verify::SUITES.to_vec())?;
    Ok(())
}
