//! Worked examples shipped as problem files, loadable with `--fixture`.

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../fixtures/", $name, ".ideal")))),*
        ];
    };
}

fixtures!(
    "intro",
    "extended-pentagon",
    "better-than-epsilon",
    "hypergraph-ten",
    "tetrahedron",
    "h-tree",
    "pair-leaves",
    "higher-power",
    "octagon",
    "hypergraph-example",
    "path-square",
    "binomial-edge-path",
    "rees-fiber",
    "oriented-graph",
);

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}
