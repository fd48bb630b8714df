fn main() {
    std::process::exit(adscoords::cli::run(std::env::args_os()));
}
