use serde::Serialize;

use super::Frame;

/// Membership in the frame class characterising Skolemization, restricted to
/// finite frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    InF,
    /// Validates ED but not SW. Only infinite frames land here.
    InFEdOnly,
    /// Validates SW but not ED. Only infinite frames land here.
    InFSwOnly,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub property: String,
    pub worlds: Vec<String>,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameReport {
    pub constant_domain: bool,
    /// No upward fork: every cone `{v : w ≼ v}` is a chain. Disjoint unions
    /// of chains count as linear.
    pub linear: bool,
    pub fds: bool,
    pub wf: bool,
    pub cwf: bool,
    pub classification: Classification,
    pub witnesses: Vec<Witness>,
}

/// A fork: `w ≼ u`, `w ≼ v` with `u`, `v` incomparable.
fn find_fork(fr: &Frame, pred: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize, usize)> {
    let n = fr.len();
    for w in 0..n {
        for u in 0..n {
            for v in (u + 1)..n {
                if fr.leq[w][u] && fr.leq[w][v] && !fr.leq[u][v] && !fr.leq[v][u] && pred(w, u, v) {
                    return Some((w, u, v));
                }
            }
        }
    }
    None
}

pub fn frame_properties(fr: &Frame) -> FrameReport {
    let mut witnesses = Vec::new();
    let names = |ws: &[usize]| ws.iter().map(|&w| fr.worlds[w].clone()).collect::<Vec<_>>();

    let mut constant_domain = true;
    'outer: for u in 0..fr.len() {
        for v in fr.above(u) {
            if let Some(&e) = fr.domains[v].difference(&fr.domains[u]).next() {
                constant_domain = false;
                witnesses.push(Witness {
                    property: "constant_domain".into(),
                    worlds: names(&[u, v]),
                    elements: vec![fr.elements[e].clone()],
                });
                break 'outer;
            }
        }
    }

    let fork = find_fork(fr, |_, _, _| true);
    let linear = fork.is_none();
    if let Some((w, u, v)) = fork {
        witnesses.push(Witness { property: "linear".into(), worlds: names(&[w, u, v]), elements: vec![] });
    }

    let bad_fork = find_fork(fr, |w, u, v| {
        !(fr.domains[u] == fr.domains[w] && fr.domains[v] == fr.domains[w] && fr.domains[w].len() == 1)
    });
    let fds = bad_fork.is_none();
    if let Some((w, u, v)) = bad_fork {
        let mut elements: Vec<String> = fr.domains[u]
            .union(&fr.domains[v])
            .map(|&e| fr.elements[e].clone())
            .collect();
        elements.sort();
        witnesses.push(Witness { property: "fds".into(), worlds: names(&[w, u, v]), elements });
    }

    let classification = classify_components(fr, constant_domain);
    FrameReport {
        constant_domain,
        linear,
        fds,
        wf: true,
        cwf: true,
        classification,
        witnesses,
    }
}

/// Connected components of the comparability graph.
fn components(fr: &Frame) -> Vec<Vec<usize>> {
    let n = fr.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for v in 0..n {
                if comp[v] == usize::MAX && (fr.leq[u][v] || fr.leq[v][u]) {
                    comp[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        members.sort();
        out.push(members);
    }
    out
}

/// A finite frame is in F iff it is constant-domain and each connected
/// component either has a singleton domain or is linear (F is closed under
/// disjoint unions; WF and cWF hold trivially).
fn classify_components(fr: &Frame, constant_domain: bool) -> Classification {
    if !constant_domain {
        return Classification::Outside;
    }
    let ok = components(fr).into_iter().all(|members| {
        let singleton = fr.domains[members[0]].len() == 1;
        let linear = members.iter().all(|&w| {
            members.iter().all(|&u| {
                members.iter().all(|&v| {
                    !(fr.leq[w][u] && fr.leq[w][v]) || fr.leq[u][v] || fr.leq[v][u]
                })
            })
        });
        singleton || linear
    });
    if ok {
        Classification::InF
    } else {
        Classification::Outside
    }
}

pub fn classify_frame(fr: &Frame) -> Classification {
    frame_properties(fr).classification
}

/// All partial orders on `n` labelled points, as reflexive `leq` matrices.
pub fn enumerate_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let antisym = pairs.iter().all(|&(i, j)| !(leq[i][j] && leq[j][i]));
        let trans = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k]))
        });
        if antisym && trans {
            out.push(leq);
        }
    }
    out
}

fn frame_from_leq(leq: &[Vec<bool>], domain_sizes: &[usize]) -> Frame {
    let n = leq.len();
    let worlds: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let mut order = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                order.push((worlds[i].clone(), worlds[j].clone()));
            }
        }
    }
    let domains = domain_sizes
        .iter()
        .map(|&k| (0..k).map(|e| format!("d{e}")).collect())
        .collect();
    Frame::new(worlds, &order, domains).expect("enumerated frame is valid")
}

/// Every frame with at most four worlds and a constant domain of size one or
/// two, followed by every chain of length two or three whose domains grow
/// (sizes non-decreasing, at most three, not all equal).
pub fn enumerate_acceptance_frames() -> Vec<Frame> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for leq in enumerate_posets(n) {
            for d in 1..=2 {
                out.push(frame_from_leq(&leq, &vec![d; n]));
            }
        }
    }
    for len in 2..=3usize {
        let chain: Vec<Vec<bool>> = (0..len).map(|i| (0..len).map(|j| i <= j).collect()).collect();
        let mut sizes = vec![1; len];
        loop {
            if sizes.windows(2).all(|p| p[0] <= p[1]) && sizes[0] != sizes[len - 1] {
                out.push(frame_from_leq(&chain, &sizes));
            }
            let mut i = 0;
            while i < len && sizes[i] == 3 {
                sizes[i] = 1;
                i += 1;
            }
            if i == len {
                break;
            }
            sizes[i] += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fork(domain: &[&str]) -> Frame {
        let d: Vec<String> = domain.iter().map(|s| s.to_string()).collect();
        Frame::new(
            vec!["w".into(), "v1".into(), "v2".into()],
            &[("w".into(), "v1".into()), ("w".into(), "v2".into())],
            vec![d.clone(), d.clone(), d],
        )
        .unwrap()
    }

    #[test]
    fn fork_with_two_elements() {
        let r = frame_properties(&fork(&["a", "b"]));
        assert!(r.constant_domain && !r.linear && !r.fds);
        assert!(r.wf && r.cwf);
        assert_eq!(r.classification, Classification::Outside);
    }

    #[test]
    fn fork_with_singleton_domain_is_in_f() {
        assert_eq!(classify_frame(&fork(&["a"])), Classification::InF);
    }

    #[test]
    fn growing_chain_is_not_constant_domain() {
        let fr = Frame::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
            vec![vec!["0".into()], vec!["0".into(), "1".into()], vec!["0".into(), "1".into(), "2".into()]],
        )
        .unwrap();
        let r = frame_properties(&fr);
        assert!(!r.constant_domain);
        assert_eq!(r.classification, Classification::Outside);
    }

    #[test]
    fn linear_constant_domain_with_three_elements() {
        let d: Vec<String> = vec!["0".into(), "1".into(), "2".into()];
        let fr = Frame::new(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into())],
            vec![d.clone(), d],
        )
        .unwrap();
        assert_eq!(classify_frame(&fr), Classification::InF);
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn classification_matches_fds_on_constant_domains() {
        for fr in enumerate_acceptance_frames() {
            let r = frame_properties(&fr);
            let expected = r.constant_domain && r.fds;
            assert_eq!(r.classification == Classification::InF, expected);
        }
    }

    #[test]
    fn disjoint_union_of_members_is_a_member() {
        let chain = {
            let d: Vec<String> = vec!["0".into(), "1".into()];
            Frame::new(vec!["a".into(), "b".into()], &[("a".into(), "b".into())], vec![d.clone(), d]).unwrap()
        };
        let u = fork(&["a"]).disjoint_union(&chain);
        assert_eq!(u.len(), 5);
        assert!(!frame_properties(&u).linear);
        assert_eq!(classify_frame(&u), Classification::InF);
    }
}
