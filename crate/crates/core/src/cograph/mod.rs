//! Distance-to-cograph machinery: modulator search, cotree construction,
//! block-partition algebra and the coloring dynamic program.

pub mod cotree;
pub mod dp;
pub mod modulator;
pub mod partition;

pub use cotree::{build_cotree, Cotree, CotreeNode};
pub use dp::{dp_solve, solve_cograph, solve_cograph_opts, CographOptions};
pub use modulator::{find_induced_p4, find_modulator};
pub use partition::BlockPartition;
