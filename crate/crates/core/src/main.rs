fn main() {
    std::process::exit(magtunnel::cli::run());
}
