//! Holds the `acceptance` test target; run it with
//! `cargo test -p mtbs-validation --test acceptance`.
