//! Fans, segments, Θ-separators and flowers.

pub mod fans;
pub mod flowers;
pub mod segments;
pub mod theta;

pub use fans::{has_4_element_fan, is_fan_ordering, maximal_fans, FanEnd, FanIndex, FanOrdering, TripleKind};
pub use flowers::{find_swirl_like_around_fan, is_flower, is_swirl_like, Flower, FlowerKind};
pub use segments::{cosegments, is_segment, segments};
pub use theta::{theta_separators, Orientation, ThetaSeparator, ThetaVariant};
