fn main() {
    std::process::exit(c2knot::cli::main());
}
