//! Deterministic parallel map: the input is chunked by index and results
//! are concatenated in input order, so output never depends on scheduling.

pub fn par_map<T, U, F>(jobs: usize, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let jobs = jobs.min(items.len());
    let chunk = items.len().div_ceil(jobs);
    let mut slots: Vec<Option<Vec<U>>> = Vec::new();
    slots.resize_with(jobs, || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (w, piece) in items.chunks(chunk).enumerate() {
            let fref = &f;
            handles.push((w, scope.spawn(move || piece.iter().map(fref).collect::<Vec<U>>())));
        }
        for (w, h) in handles {
            slots[w] = Some(h.join().expect("worker panicked"));
        }
    });
    slots.into_iter().flatten().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_deterministic() {
        let items: Vec<u64> = (0..103).collect();
        let seq = par_map(1, &items, |x| x * x);
        for jobs in [2usize, 3, 7] {
            assert_eq!(par_map(jobs, &items, |x| x * x), seq);
        }
    }
}
