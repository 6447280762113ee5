//! Single-relocation audit: can moving one ball to a free window site raise
//! the contact count?

use super::{SearchError, SiteGraph};
use crate::hexlattice::{HexCoord, Window};
use crate::packing::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relocation {
    /// 1-based ball index.
    pub ball: usize,
    pub from: HexCoord,
    pub to: HexCoord,
    pub gain: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalAudit {
    pub contact_count: usize,
    pub locally_maximal: bool,
    /// Largest-gain improving move (lowest ball, then lowest site, on ties).
    pub improving_move: Option<Relocation>,
}

pub fn local_maximality_check(cfg: &Configuration, window: &Window) -> Result<LocalAudit, SearchError> {
    cfg.validate()?;
    let graph = SiteGraph::new(*window);
    let sites = graph.indices_of(cfg)?;
    let mut member = vec![false; graph.len()];
    let mut touch = vec![0usize; graph.len()];
    for &s in &sites {
        member[s as usize] = true;
        for &t in &graph.adj[s as usize] {
            touch[t as usize] += 1;
        }
    }
    let mut best: Option<Relocation> = None;
    for (b, &from) in sites.iter().enumerate() {
        let lost = touch[from as usize];
        for to in 0..graph.len() as u32 {
            if member[to as usize] {
                continue;
            }
            let gained = touch[to as usize] - graph.adj[from as usize].contains(&to) as usize;
            if gained > lost && best.is_none_or(|m| gained - lost > m.gain) {
                best = Some(Relocation {
                    ball: b + 1,
                    from: window.site(from as usize),
                    to: window.site(to as usize),
                    gain: gained - lost,
                });
            }
        }
    }
    Ok(LocalAudit { contact_count: graph.count_edges(&sites), locally_maximal: best.is_none(), improving_move: best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::embedded;

    #[test]
    fn reference_configurations_up_to_25_are_local_maxima() {
        for n in 20..=25 {
            let cfg = embedded(n).unwrap().configuration;
            let w = Window::around(&cfg.centers, 1).unwrap();
            let audit = local_maximality_check(&cfg, &w).unwrap();
            assert!(audit.locally_maximal, "n = {n}: {:?}", audit.improving_move);
        }
    }

    #[test]
    fn reference_configurations_26_and_27_improve_by_one() {
        for n in [26, 27] {
            let e = embedded(n).unwrap();
            let w = Window::around(&e.configuration.centers, 1).unwrap();
            let mv = local_maximality_check(&e.configuration, &w).unwrap().improving_move.unwrap();
            assert_eq!((mv.ball, mv.from, mv.to, mv.gain), (1, HexCoord::new(0, 0, 0), HexCoord::new(1, -1, 1), 1));
            let mut moved = e.configuration.centers.clone();
            moved[0] = mv.to;
            assert_eq!(Configuration::new(moved).contact_count().unwrap(), e.claimed_total + 1);
            // Inside the tighter 5x5x4 box the target site is unavailable.
            assert!(local_maximality_check(&e.configuration, &Window::new(5, 5, 4).unwrap()).unwrap().locally_maximal);
        }
    }

    #[test]
    fn separated_pair_can_improve() {
        let cfg = Configuration::new(vec![HexCoord::new(0, 0, 0), HexCoord::new(3, 0, 0)]);
        let audit = local_maximality_check(&cfg, &Window::new(4, 1, 1).unwrap()).unwrap();
        assert!(!audit.locally_maximal);
        let mv = audit.improving_move.unwrap();
        assert_eq!(mv.gain, 1);
        assert_eq!(mv.ball, 1);
        assert_eq!(mv.to, HexCoord::new(2, 0, 0));
    }

    #[test]
    fn must_fit_window() {
        let cfg = Configuration::new(vec![HexCoord::new(9, 0, 0)]);
        assert!(matches!(
            local_maximality_check(&cfg, &Window::new(2, 2, 2).unwrap()),
            Err(SearchError::OutsideWindow(_))
        ));
    }
}
