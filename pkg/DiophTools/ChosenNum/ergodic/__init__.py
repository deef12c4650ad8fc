from DiophTools.ChosenNum.ergodic.averages import *
from DiophTools.ChosenNum.ergodic.sparse import *
