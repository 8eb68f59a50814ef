//! Data and parameter samplers for Monte-Carlo estimation.

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;
use std::f64::consts::TAU;

/// Distribution of the data variable `x`.
#[derive(Debug, Clone, Serialize)]
pub enum DataSampler {
    /// Uniform on `[lo, hi)`.
    UniformInterval { lo: f64, hi: f64 },
    /// Normal with the given mean and standard deviation.
    Gaussian { mean: f64, std: f64 },
    /// A finite dataset; draws cycle through the points in order.
    Fixed(Vec<f64>),
}

impl DataSampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            DataSampler::UniformInterval { lo, hi } => {
                assert!(lo < hi, "interval must be nonempty");
                rng.random_range(*lo..*hi)
            }
            DataSampler::Gaussian { mean, std } => {
                let normal = Normal::new(*mean, *std).expect("std must be positive and finite");
                normal.sample(rng)
            }
            DataSampler::Fixed(points) => {
                assert!(!points.is_empty(), "fixed dataset must be nonempty");
                points[rng.random_range(0..points.len())]
            }
        }
    }

    /// `count` evaluation nodes: fixed datasets cycle through their points
    /// in order, distributions draw fresh samples.
    pub fn nodes<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<f64> {
        match self {
            DataSampler::Fixed(points) => {
                assert!(!points.is_empty(), "fixed dataset must be nonempty");
                (0..count).map(|i| points[i % points.len()]).collect()
            }
            _ => (0..count).map(|_| self.sample(rng)).collect(),
        }
    }

    /// Natural node count for averaging over this distribution: every point
    /// of a fixed dataset, a default draw count otherwise.
    pub fn default_node_count(&self) -> usize {
        match self {
            DataSampler::Fixed(points) => points.len(),
            _ => 8,
        }
    }

    /// Comma-free one-line descriptor for CSV embedding.
    pub fn describe(&self) -> String {
        match self {
            DataSampler::UniformInterval { lo, hi } => format!("uniform[{lo}..{hi}]"),
            DataSampler::Gaussian { mean, std } => format!("gaussian(mean={mean} std={std})"),
            DataSampler::Fixed(points) => format!("fixed({} points)", points.len()),
        }
    }
}

/// Distribution of one rotation angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AngleSampler {
    /// Uniform on `[0, 2*pi)`.
    UniformCircle,
    /// `arccos(u)/2` for `u` uniform on `[-1, 1)`: the middle angle of a
    /// ZYZ Euler block whose three angles compose to a Haar-random
    /// single-qubit unitary when the outer two are uniform.
    HaarPolar,
}

impl AngleSampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            AngleSampler::UniformCircle => rng.random_range(0.0..TAU),
            AngleSampler::HaarPolar => 0.5 * rng.random_range(-1.0_f64..1.0).acos(),
        }
    }
}

/// Joint sampler for the full parameter vector, one angle per entry.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaSampler {
    per_param: Vec<AngleSampler>,
}

impl ThetaSampler {
    /// Every parameter uniform on `[0, 2*pi)`.
    pub fn uniform(n_params: usize) -> Self {
        Self {
            per_param: vec![AngleSampler::UniformCircle; n_params],
        }
    }

    /// Replaces the sampler for one parameter.
    pub fn with_sampler(mut self, index: usize, sampler: AngleSampler) -> Self {
        self.per_param[index] = sampler;
        self
    }

    pub fn len(&self) -> usize {
        self.per_param.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_param.is_empty()
    }

    /// One draw of the full parameter vector, in index order.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.per_param.iter().map(|s| s.sample(rng)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qru_algebra::rng::seeded_rng;
    use std::f64::consts::PI;

    #[test]
    fn uniform_interval_stays_inside() {
        let mut rng = seeded_rng(1);
        let sampler = DataSampler::UniformInterval { lo: -1.0, hi: 2.0 };
        for _ in 0..1000 {
            let x = sampler.sample(&mut rng);
            assert!((-1.0..2.0).contains(&x));
        }
    }

    #[test]
    fn fixed_nodes_cycle_in_order() {
        let mut rng = seeded_rng(2);
        let sampler = DataSampler::Fixed(vec![1.0, 2.0, 3.0]);
        assert_eq!(
            sampler.nodes(5, &mut rng),
            vec![1.0, 2.0, 3.0, 1.0, 2.0]
        );
        assert_eq!(sampler.default_node_count(), 3);
    }

    #[test]
    fn gaussian_mean_converges() {
        let mut rng = seeded_rng(3);
        let sampler = DataSampler::Gaussian {
            mean: 2.0,
            std: 0.5,
        };
        let n = 20_000;
        let mean: f64 = (0..n).map(|_| sampler.sample(&mut rng)).sum::<f64>() / n as f64;
        assert!((mean - 2.0).abs() < 3.0 * 0.5 / (n as f64).sqrt());
    }

    #[test]
    fn haar_polar_range_and_mean() {
        // arccos(u)/2 lies in [0, pi/2]; E = pi/4 by symmetry of u.
        let mut rng = seeded_rng(4);
        let n = 20_000;
        let draws: Vec<f64> = (0..n)
            .map(|_| AngleSampler::HaarPolar.sample(&mut rng))
            .collect();
        assert!(draws.iter().all(|&b| (0.0..=PI / 2.0).contains(&b)));
        let mean = draws.iter().sum::<f64>() / n as f64;
        assert!((mean - PI / 4.0).abs() < 0.01);
    }

    #[test]
    fn theta_sampler_is_per_index() {
        let mut rng = seeded_rng(5);
        let sampler = ThetaSampler::uniform(3).with_sampler(1, AngleSampler::HaarPolar);
        for _ in 0..200 {
            let theta = sampler.sample(&mut rng);
            assert_eq!(theta.len(), 3);
            assert!((0.0..TAU).contains(&theta[0]));
            assert!((0.0..=PI / 2.0).contains(&theta[1]));
            assert!((0.0..TAU).contains(&theta[2]));
        }
    }

    #[test]
    fn descriptors_are_comma_free() {
        for sampler in [
            DataSampler::UniformInterval { lo: 0.0, hi: TAU },
            DataSampler::Gaussian {
                mean: 0.0,
                std: 1.0,
            },
            DataSampler::Fixed(vec![0.5; 4]),
        ] {
            assert!(!sampler.describe().contains(','));
        }
    }
}
