fn main() {
    std::process::exit(drvkit::cli::run(std::env::args_os()));
}
