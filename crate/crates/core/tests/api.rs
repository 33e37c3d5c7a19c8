use injective_core::bounds::{self, Method};
use injective_core::coloring::verify_injective;
use injective_core::io::{self, Format};
use injective_core::solver::injective_chromatic_index;
use injective_core::{corpus, mad_exact, Rational};

#[test]
fn fixtures_through_the_public_api() {
    for fx in corpus::all() {
        let Some(want) = fx.expected_index else { continue };
        let r = injective_chromatic_index(&fx.graph).unwrap();
        assert_eq!(r.index, want, "{}", fx.name);
        assert!(verify_injective(&fx.graph, &r.coloring).unwrap().valid);
        assert!(r.clique.len() <= r.index);
    }
}

#[test]
fn text_formats_agree() {
    let g = corpus::get("heawood").unwrap().graph;
    for f in [Format::Graph6, Format::EdgeList, Format::Dimacs] {
        let back = io::parse_graph(&io::write_graph(&g, f), f).unwrap();
        assert!(back.same_edge_set(&g), "{f:?}");
    }
}

#[test]
fn bound_sits_above_index() {
    let g = corpus::get("sun").unwrap().graph;
    assert_eq!(mad_exact(&g).unwrap(), Rational::from_integer(2));
    let exact = injective_chromatic_index(&g).unwrap().index;
    let r = bounds::bound(&g, Method::Mad73, false).unwrap();
    assert!(exact <= r.coloring.palette_size());
    assert!(r.coloring.palette_size() <= r.bound_claimed);
}
