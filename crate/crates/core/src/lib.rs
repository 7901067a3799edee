pub mod balls;
pub mod cli;
pub mod cosets;
pub mod fixtures;
pub mod iso;
pub mod localmodel;
pub mod reconstruct;
pub mod words;
