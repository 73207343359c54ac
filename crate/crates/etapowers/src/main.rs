fn main() {
    std::process::exit(etapowers::run());
}
