//! Turns command line source flags into pipeline objects.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use diffract::{
    io, CosetDecomposition, Error, FiniteGroup, Result, Subgroup, Transversal,
    TransversalStrategy,
};

use crate::SourceArgs;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Loads the group named by exactly one of the source flags and enforces
/// the order cap.
pub fn load_group(src: &SourceArgs, cap: usize) -> Result<Arc<FiniteGroup>> {
    let group = if let Some(spec) = &src.builtin {
        FiniteGroup::builtin(spec)?
    } else if let Some(path) = &src.table {
        io::parse_gtab(&read(path)?)?.with_name(format!("table:{}", stem(path)))
    } else if let Some(path) = &src.gens {
        io::parse_gens(&read(path)?, cap)?.with_name(format!("gens:{}", stem(path)))
    } else {
        unreachable!("clap requires exactly one source flag")
    };
    if group.order() > cap {
        return Err(Error::GroupTooLarge { cap });
    }
    Ok(Arc::new(group))
}

/// Resolves an element reference: an exact label first, then a bare index.
pub fn resolve_element(group: &FiniteGroup, spec: &str) -> Result<usize> {
    let spec = spec.trim();
    if let Some(idx) = group.element_by_label(spec) {
        return Ok(idx);
    }
    if let Ok(idx) = spec.parse::<usize>() {
        if idx < group.order() {
            return Ok(idx);
        }
        return Err(Error::IndexOutOfRange {
            index: idx,
            order: group.order(),
        });
    }
    Err(Error::UnknownElement(spec.to_string()))
}

/// Closes a comma-separated generator list into a subgroup. An empty list
/// gives the trivial subgroup.
pub fn build_subgroup(group: &Arc<FiniteGroup>, gens: &str) -> Result<Arc<Subgroup>> {
    let mut indices = Vec::new();
    for part in gens.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        indices.push(resolve_element(group, part)?);
    }
    Ok(Arc::new(Subgroup::generate(group.clone(), &indices)?))
}

pub fn build_transversal(
    subgroup: Arc<Subgroup>,
    strategy: &str,
    allow_non_transversal: bool,
) -> Result<Arc<Transversal>> {
    let decomposition = Arc::new(CosetDecomposition::left_cosets(subgroup));
    let strategy = TransversalStrategy::parse(strategy)?;
    Ok(Arc::new(Transversal::choose(
        decomposition,
        &strategy,
        allow_non_transversal,
    )?))
}
