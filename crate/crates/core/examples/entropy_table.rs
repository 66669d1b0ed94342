fn main() {
    let rows = k3dyn::dynamics::entropy_table().unwrap();
    print!("{}", k3dyn::dynamics::render_text(&rows));
}
