use std::boxed::Box;
use std::cell::RefCell;

use super::GroebnerBasis;

type Observer = Box<dyn FnMut(&GroebnerBasis)>;

std::thread_local! {
    static OBSERVER: RefCell<Option<Observer>> = const { RefCell::new(None) };
}

/// Runs `f`, handing every Gröbner basis computed on this thread to
/// `observer`. Used by audit suites that re-check each basis.
pub fn observe_bases<R>(observer: impl FnMut(&GroebnerBasis) + 'static, f: impl FnOnce() -> R) -> R {
    let prev = OBSERVER.with(|o| o.borrow_mut().replace(Box::new(observer)));
    let out = f();
    OBSERVER.with(|o| *o.borrow_mut() = prev);
    out
}

pub(super) fn notify(gb: &GroebnerBasis) {
    OBSERVER.with(|o| {
        if let Ok(mut slot) = o.try_borrow_mut() {
            if let Some(obs) = slot.as_mut() {
                obs(gb);
            }
        }
    });
}
