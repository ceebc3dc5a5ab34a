//! Image grid, non-uniform frequency coordinates, and the complex image container.

use num_complex::Complex;

use crate::error::{Result, SarError};
use crate::rng::RngStream;
use crate::scalar::{real, Scalar};

/// Dimensions of the reconstruction grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    nx: usize,
    ny: usize,
}

impl GridSpec {
    pub fn new(nx: usize, ny: usize) -> Result<Self> {
        if nx < 1 || ny < 1 {
            return Err(SarError::Parameter(format!(
                "grid dimensions must be at least 1, got {nx}x{ny}"
            )));
        }
        if nx.checked_mul(ny).is_none() {
            return Err(SarError::Parameter(format!(
                "grid {nx}x{ny} overflows pixel count"
            )));
        }
        Ok(Self { nx, ny })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Total pixel count nx·ny.
    pub fn n(&self) -> usize {
        self.nx * self.ny
    }

    /// Row-major pixel index of (jx, jy).
    pub fn index(&self, jx: usize, jy: usize) -> usize {
        debug_assert!(jx < self.nx && jy < self.ny);
        jy * self.nx + jx
    }
}

/// One normalized spatial frequency, in cycles per pixel, each component in [-1/2, 1/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreqCoord<T> {
    pub kx: T,
    pub ky: T,
}

/// The non-uniform sample locations of the measurement operator.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoords<T> {
    coords: Vec<FreqCoord<T>>,
}

impl<T: Scalar> FourierCoords<T> {
    /// Validates every coordinate into [-1/2, 1/2); out-of-range values are
    /// rejected rather than wrapped, since wrapping silently aliases.
    pub fn new(coords: Vec<FreqCoord<T>>) -> Result<Self> {
        if coords.is_empty() {
            return Err(SarError::Parameter(
                "coordinate list must be non-empty".into(),
            ));
        }
        let half = real::<T>(0.5);
        for (i, c) in coords.iter().enumerate() {
            for (axis, k) in [("kx", c.kx), ("ky", c.ky)] {
                if !k.is_finite() || k < -half || k >= half {
                    return Err(SarError::Parameter(format!(
                        "coordinate {i}: {axis} = {k} outside [-1/2, 1/2)"
                    )));
                }
            }
        }
        Ok(Self { coords })
    }

    /// The full uniform DFT frequency set for `grid`, row-major over (ux, uy).
    ///
    /// With this set the normalized operator is exactly unitary.
    pub fn full_uniform(grid: GridSpec) -> Self {
        let map = |u: usize, n: usize| -> T {
            let k = real::<T>(u as f64 / n as f64);
            if k >= real(0.5) {
                k - T::one()
            } else {
                k
            }
        };
        let mut coords = Vec::with_capacity(grid.n());
        for uy in 0..grid.ny() {
            for ux in 0..grid.nx() {
                coords.push(FreqCoord {
                    kx: map(ux, grid.nx()),
                    ky: map(uy, grid.ny()),
                });
            }
        }
        Self { coords }
    }

    /// `m` coordinates drawn uniformly from [-1/2, 1/2)^2.
    pub fn random(m: usize, rng: &mut RngStream) -> Result<Self> {
        if m == 0 {
            return Err(SarError::Parameter(
                "coordinate list must be non-empty".into(),
            ));
        }
        let half = real::<T>(0.5);
        let coords = (0..m)
            .map(|_| FreqCoord {
                kx: T::unit_uniform(rng) - half,
                ky: T::unit_uniform(rng) - half,
            })
            .collect();
        Ok(Self { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FreqCoord<T>> {
        self.coords.iter()
    }

    pub fn as_slice(&self) -> &[FreqCoord<T>] {
        &self.coords
    }
}

/// Complex reflectivity image over a grid, stored row-major (x fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectivityImage<T> {
    grid: GridSpec,
    values: Vec<Complex<T>>,
}

impl<T: Scalar> ReflectivityImage<T> {
    pub fn new(grid: GridSpec, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(SarError::SizeMismatch {
                what: "image values",
                expected: grid.n(),
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(SarError::Parameter(
                "image contains non-finite values".into(),
            ));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            values: vec![Complex::new(T::zero(), T::zero()); grid.n()],
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<T>> {
        self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rejects_zero_dimension() {
        assert!(GridSpec::new(0, 4).is_err());
        assert!(GridSpec::new(4, 0).is_err());
        let g = GridSpec::new(3, 5).unwrap();
        assert_eq!(g.n(), 15);
        assert_eq!(g.index(2, 4), 14);
    }

    #[test]
    fn coords_reject_out_of_range() {
        let ok = FourierCoords::<f64>::new(vec![FreqCoord { kx: -0.5, ky: 0.499 }]);
        assert!(ok.is_ok());
        let too_high = FourierCoords::<f64>::new(vec![FreqCoord { kx: 0.5, ky: 0.0 }]);
        assert!(too_high.is_err());
        let too_low = FourierCoords::<f64>::new(vec![FreqCoord { kx: 0.0, ky: -0.6 }]);
        assert!(too_low.is_err());
        let nan = FourierCoords::<f64>::new(vec![FreqCoord { kx: f64::NAN, ky: 0.0 }]);
        assert!(nan.is_err());
        let empty = FourierCoords::<f64>::new(vec![]);
        assert!(empty.is_err());
    }

    #[test]
    fn full_uniform_covers_grid() {
        let g = GridSpec::new(4, 2).unwrap();
        let coords = FourierCoords::<f64>::full_uniform(g);
        assert_eq!(coords.len(), 8);
        for c in coords.iter() {
            assert!(c.kx >= -0.5 && c.kx < 0.5);
            assert!(c.ky >= -0.5 && c.ky < 0.5);
        }
        // kx values for nx = 4 are {0, 1/4, -1/2, -1/4}
        let kxs: Vec<f64> = coords.iter().take(4).map(|c| c.kx).collect();
        assert_eq!(kxs, vec![0.0, 0.25, -0.5, -0.25]);
    }

    #[test]
    fn image_length_must_match_grid() {
        let g = GridSpec::new(2, 2).unwrap();
        let bad = ReflectivityImage::<f64>::new(g, vec![Complex::new(0.0, 0.0); 3]);
        assert!(matches!(bad, Err(SarError::SizeMismatch { .. })));
        let nan = ReflectivityImage::<f64>::new(
            g,
            vec![
                Complex::new(f64::NAN, 0.0),
                Complex::new(0.0, 0.0),
                Complex::new(0.0, 0.0),
                Complex::new(0.0, 0.0),
            ],
        );
        assert!(nan.is_err());
    }
}
