//! Parsers turning the three external data families into competition
//! networks: co-voting seasons (Votes-CSV), conflict events (Events-CSV)
//! and food webs (Pajek subset).

pub mod events;
pub mod pajek;
pub mod votes;

pub use events::{network_from_events, parse_events_csv, EventRecord};
pub use pajek::{energy_imbalance, parse_pajek, EnergyImbalance};
pub use votes::{parse_votes_csv, write_votes_csv, SeasonRecord};
