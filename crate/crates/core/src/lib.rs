pub mod script;
pub mod phoneme;
pub mod tonebox;
pub mod lexicon;
pub mod g2p;
pub mod orthography;
pub mod transcript;
pub mod cli;
