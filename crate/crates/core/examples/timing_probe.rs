// quick timing probe
use rainbow_core::enumerate::enumerate_connected_graphs;
use std::time::Instant;

fn main() {
    for n in 5..=8 {
        let t = Instant::now();
        let v = enumerate_connected_graphs(n, None).unwrap();
        println!("n={} classes={} elapsed={:?}", n, v.len(), t.elapsed());
    }
}
