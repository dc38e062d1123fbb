//! A flag weak pseudomanifold that is not normal, and the strict join containment it exhibits.

use flagtop::bounds::check_join_criterion;
use flagtop::constructions::remark_complex;
use flagtop::validators::{is_flag, is_normal_pseudomanifold, is_weak_pseudomanifold};

fn main() -> flagtop::Result<()> {
    let k = remark_complex(4, 4, 4, 4)?;
    println!("f = {}", k.f_vector());
    println!("flag: {}", is_flag(&k).holds);
    println!("weak pseudomanifold: {}", is_weak_pseudomanifold(&k).holds);
    let normal = is_normal_pseudomanifold(&k);
    println!("normal pseudomanifold: {} (witness {})", normal.holds, serde_json::to_string(&normal.witness).unwrap());

    for &facet in k.facets() {
        for tau1 in facet.subsets_of_size(2) {
            let r = check_join_criterion(&k, tau1, facet.difference(tau1))?;
            if r.union_covers {
                println!(
                    "facet {facet}: lk{} ∪ lk{} covers V; contained={:?} equal={:?}",
                    r.tau1, r.tau2, r.contained, r.equal
                );
                return Ok(());
            }
        }
    }
    Ok(())
}
