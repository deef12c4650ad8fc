from DiophTools.ChosenNum.primes.sieve import *
from DiophTools.ChosenNum.primes.harmonic import *
