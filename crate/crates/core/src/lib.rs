//! Diffusion-limited binding of a particle to a spherical target inside a
//! reflecting ball, under two reaction models:
//!
//! * **Smoluchowski**: binding on first contact with the target sphere.
//! * **Doi**: binding at rate `lambda` while inside the target sphere.
//!
//! [`spectral`] solves both radial eigenproblems, [`solution`] turns them into
//! densities, binding-time distributions and mean times, [`mc`] is an
//! independent Brownian-dynamics check, and [`harness`] runs the comparison
//! studies behind the `doismol` command.

pub mod harness;
pub mod mc;
pub mod numerics;
pub mod solution;
pub mod spectral;
