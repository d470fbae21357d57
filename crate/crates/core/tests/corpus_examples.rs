use unl_core::{
    build_graph, entry_of, lint_document, parse_document, Code, DigitId, EdgeTarget, NodeTerm, SemanticGraph,
};

const HUMAN: &str = include_str!("data/human.unl");
const MALAYSIA: &str = include_str!("data/malaysia.unl");

fn scope_lemmas(g: &SemanticGraph, id: &str) -> Vec<String> {
    let scope = g.scope(&DigitId::new(id).unwrap()).expect("scope");
    scope.members.iter().map(|n| g.node(*n).lemma.clone()).collect()
}

#[test]
fn human_parses_into_two_relations() {
    let doc = parse_document(HUMAN).unwrap();
    assert!(doc.had_delimiters);
    let labels: Vec<&str> = doc.relations.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels, ["agt", "obj"]);
    assert!(!doc.has_errors());
    assert!(doc.diagnostics.is_empty(), "{:?}", doc.diagnostics);

    let affect = &doc.relations[0].source;
    assert_eq!(affect.lemma(), "affect");
    assert_eq!(affect.attributes(), ["present", "entry"]);
    assert_eq!(affect.instance_id().unwrap().as_str(), "01");
    assert_eq!(doc.relations[0].line_span, (2, 3));
    assert_eq!(doc.relations[1].line_span, (4, 5));

    let env = doc.relations[1].target.as_word().unwrap();
    assert_eq!(env.restrictions()[0].chain(), ["abstract thing"]);
}

#[test]
fn human_graph() {
    let g = build_graph(&parse_document(HUMAN).unwrap());
    let lemmas: Vec<&str> = g.nodes().iter().map(|n| n.lemma.as_str()).collect();
    assert_eq!(lemmas, ["affect", "human", "environment"]);
    let edges: Vec<(&str, usize, EdgeTarget)> = g
        .edges()
        .iter()
        .map(|e| (e.label.as_str(), e.source.0, e.target.clone()))
        .collect();
    assert_eq!(
        edges,
        [
            ("agt", 0, EdgeTarget::Node(unl_core::NodeId(1))),
            ("obj", 0, EdgeTarget::Node(unl_core::NodeId(2))),
        ]
    );
    assert_eq!(g.root_entry().unwrap().lemma, "affect");
    // The `:01` on `affect` is an instance id; no scope is created for it.
    assert_eq!(g.scopes().len(), 1);
}

#[test]
fn malaysia_parses_into_six_relations() {
    let doc = parse_document(MALAYSIA).unwrap();
    let labels: Vec<&str> = doc.relations.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels, ["agt", "plt", "plf", "met", "obj", "pur"]);
    assert!(!doc.has_errors());
    assert!(doc.diagnostics.is_empty(), "{:?}", doc.diagnostics);
    assert_eq!(doc.relations[4].scope_suffix.as_ref().unwrap().as_str(), "01");
    assert_eq!(doc.relations[5].target, NodeTerm::ScopeRef(DigitId::new("01").unwrap()));

    let aeroplane = doc.relations[3].target.as_word().unwrap();
    let rs: Vec<String> = aeroplane.restrictions().iter().map(|r| r.to_string()).collect();
    assert_eq!(rs, ["icl>heavier-than-air_craft>thing", "equ>airplane"]);
}

/// Expected grouping enumerated by hand from the six lines:
///
/// 1. `agt(go…, i…)`                 root: go, i
/// 2. `plt(go…, malaysia…)`          root: + malaysia
/// 3. `plf(go…, bangladesh…)`        root: + bangladesh
/// 4. `met(go…, aeroplane…)`         root: + aeroplane
/// 5. `obj:01(attend…, conference…)` scope 01: attend, conference
/// 6. `pur(go…, :01)`                edge go -> scope 01, no new node
#[test]
fn malaysia_graph_matches_hand_enumeration() {
    let g = build_graph(&parse_document(MALAYSIA).unwrap());
    assert_eq!(
        scope_lemmas(&g, "00"),
        ["go", "i", "malaysia", "bangladesh", "aeroplane"]
    );
    assert_eq!(scope_lemmas(&g, "01"), ["attend", "conference"]);
    assert_eq!(g.nodes().len(), 7);
    assert_eq!(g.edges().len(), 6);

    let pur = &g.edges()[5];
    assert_eq!(pur.label.as_str(), "pur");
    assert_eq!(g.node(pur.source).lemma, "go");
    assert_eq!(pur.target, EdgeTarget::Scope(DigitId::new("01").unwrap()));

    assert_eq!(entry_of(&g, &DigitId::root()).unwrap().unwrap().lemma, "go");
    assert_eq!(
        entry_of(&g, &DigitId::new("01").unwrap()).unwrap().unwrap().lemma,
        "attend"
    );
    assert_eq!(
        g.node(g.find(entry_of(&g, &DigitId::root()).unwrap().unwrap()).unwrap())
            .attributes,
        ["entry", "past"]
    );
}

#[test]
fn malaysia_lints_clean() {
    let doc = parse_document(MALAYSIA).unwrap();
    let codes: Vec<Code> = lint_document(&doc).into_iter().map(|d| d.code).collect();
    assert!(!codes.contains(&Code::W001));
    assert!(!codes.contains(&Code::W003));
}

#[test]
fn space_before_attribute_chain_is_rejected() {
    // The attribute chain follows a space rather than `.`.
    let err = parse_document("agt(read(icl>do) @entry.@present.@progress, John(iof>person))").unwrap_err();
    assert_eq!(err.code, Code::E008);
}
